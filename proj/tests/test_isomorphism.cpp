#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "support.hpp"
#include "unigraph/catalog.hpp"
#include "unigraph/isomorphism.hpp"

using namespace unigraph;
namespace ts = testing_support;
namespace cat = unigraph::catalog;

TEST_CASE("canonical forms partition labelled graphs exactly like brute force") {
  for (int n = 0; n <= 5; ++n) {
    std::map<std::string, std::string> ours_to_brute;
    std::set<std::string> brute_keys;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ts::pair_count(n)); ++mask) {
      const Graph g = ts::labelled(n, mask);
      const std::string ours = canonical_form(g);
      const std::string brute = ts::brute_canonical(g);
      brute_keys.insert(brute);
      auto [it, fresh] = ours_to_brute.emplace(ours, brute);
      if (!fresh) CHECK(it->second == brute);
    }
    CHECK(ours_to_brute.size() == brute_keys.size());
  }
}

TEST_CASE("eleven classes on four vertices") {
  std::set<std::string> forms;
  for (std::uint64_t mask = 0; mask < 64; ++mask) forms.insert(canonical_form(ts::labelled(4, mask)));
  CHECK(forms.size() == 11);
}

TEST_CASE("canonical form is invariant under relabeling for larger graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 30);
    const Graph g = ts::random_graph(rng, n, trial % 2 ? 0.2 : 0.5);
    CHECK(canonical_form(g) == canonical_form(ts::shuffled(g, rng)));
    CHECK(is_isomorphic(g, ts::shuffled(g, rng)));
  }
  // Regular graphs stress the individualisation step.
  const Graph petersen = [] {
    Graph p(10);
    for (int i = 0; i < 5; ++i) {
      p.add_edge(i, (i + 1) % 5);
      p.add_edge(5 + i, 5 + (i + 2) % 5);
      p.add_edge(i, 5 + i);
    }
    return p;
  }();
  CHECK(canonical_form(petersen) == canonical_form(ts::shuffled(petersen, rng)));
  CHECK_FALSE(is_isomorphic(petersen, disjoint_union(cat::cycle(5), cat::cycle(5))));
}

TEST_CASE("canonical labeling is a permutation that produces the form") {
  std::mt19937_64 rng(9);
  const Graph g = ts::random_graph(rng, 9);
  auto order = canonical_labeling(g);
  std::vector<Vertex> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 9; ++i) CHECK(sorted[static_cast<std::size_t>(i)] == i);
  CHECK(canonical_form(permuted(g, order)) == canonical_form(g));
}

TEST_CASE("colours restrict the isomorphisms") {
  const Graph p = cat::path(4);
  const std::vector<int> ends_red{1, 0, 0, 1};
  const std::vector<int> mids_red{0, 1, 1, 0};
  CHECK(canonical_form(p, ends_red) != canonical_form(p, mids_red));
  const std::vector<Vertex> rev{3, 2, 1, 0};
  CHECK(canonical_form(permuted(p, rev), ends_red) == canonical_form(p, ends_red));
}

TEST_CASE("R and S share degrees but are not isomorphic") {
  CHECK(ts::sorted_degrees(cat::r_graph()) == ts::sorted_degrees(cat::s_graph()));
  CHECK_FALSE(is_isomorphic(cat::r_graph(), cat::s_graph()));
  CHECK_FALSE(ts::brute_isomorphic(cat::r_graph(), cat::s_graph()));
}

TEST_CASE("find_induced examples") {
  CHECK(find_induced(cat::u_graph(1), cat::four_pan()).has_value());
  CHECK(find_induced(cat::cycle(5), cat::path(4)).has_value());
  CHECK_FALSE(find_induced(cat::cycle(5), cat::complete(3)).has_value());
  CHECK(find_induced(cat::path(3), cat::complete(1)).has_value());
}

TEST_CASE("find_induced returns genuine embeddings and agrees with brute force") {
  std::mt19937_64 rng(13);
  const std::vector<Graph> patterns{cat::path(4), cat::cycle(4), cat::matching(2), cat::chair(),
                                    cat::kite(), cat::cycle(5), cat::complete(3)};
  for (int trial = 0; trial < 30; ++trial) {
    const Graph host = ts::random_graph(rng, 7);
    for (const Graph& pat : patterns) {
      const auto emb = find_induced(host, pat);
      CHECK(emb.has_value() == ts::brute_contains_induced(host, pat));
      if (!emb) continue;
      std::set<Vertex> image(emb->begin(), emb->end());
      CHECK(image.size() == emb->size());
      for (int i = 0; i < pat.order(); ++i) {
        for (int j = i + 1; j < pat.order(); ++j) {
          CHECK(pat.adjacent(i, j) == host.adjacent((*emb)[static_cast<std::size_t>(i)], (*emb)[static_cast<std::size_t>(j)]));
        }
      }
    }
  }
}

TEST_CASE("find_forbidden reports the first pattern in list order") {
  std::vector<NamedPattern> pats{{"K3", cat::complete(3)}, {"P3", cat::path(3)}};
  const auto w = find_forbidden(cat::path(4), pats);
  REQUIRE(w);
  CHECK(w->pattern == "P3");
  CHECK(w->embedding.size() == 3);
  CHECK_FALSE(find_forbidden(cat::complete(1), pats));
}
