#include <doctest.h>

#include <map>
#include <random>

#include "support.hpp"
#include "unigraph/catalog.hpp"
#include "unigraph/classes.hpp"
#include "unigraph/errors.hpp"
#include "unigraph/oracle.hpp"

using namespace unigraph;
namespace ts = testing_support;
namespace cat = unigraph::catalog;

namespace {

bool brute_free(const Graph& g, const std::vector<Graph>& patterns) {
  for (const Graph& p : patterns) {
    if (ts::brute_contains_induced(g, p)) return false;
  }
  return true;
}

const std::vector<Graph> k2k2_c4{cat::matching(2), cat::cycle(4)};

std::vector<Graph> with(std::vector<Graph> base, std::initializer_list<Graph> more) {
  base.insert(base.end(), more.begin(), more.end());
  return base;
}

DegreeSequence seq_of(const Graph& g) { return DegreeSequence(g.degrees()); }

}  // namespace

TEST_CASE("threshold sequences") {
  CHECK(threshold_by_sequence(DegreeSequence{3, 2, 2, 1}));
  CHECK_FALSE(threshold_by_sequence(DegreeSequence{2, 2, 2, 2, 2}));
  CHECK(threshold_by_sequence(DegreeSequence{1, 1}));
  CHECK(threshold_by_sequence(DegreeSequence{}));
  CHECK_THROWS_AS(threshold_by_sequence(DegreeSequence{3, 3, 1, 1}), DomainError);
}

TEST_CASE("split and pseudo-split sequences") {
  CHECK(split_by_sequence(DegreeSequence{3, 3, 3, 1, 1, 1}));
  CHECK_FALSE(split_by_sequence(DegreeSequence{2, 2, 2, 2, 2}));
  CHECK(pseudo_split_by_sequence(DegreeSequence{2, 2, 2, 2, 2}));
  CHECK_FALSE(pseudo_split_by_sequence(DegreeSequence{4, 2, 2, 2, 2, 2}));
  // C5 joined to a clique of two with two pendant-free independent vertices.
  const Graph g = compose(SplittedGraph(cat::path(4), VertexSet{0, 3}, VertexSet{1, 2}), cat::cycle(5));
  CHECK(pseudo_split_by_sequence(seq_of(g)));
  CHECK_FALSE(split_by_sequence(seq_of(g)));
}

TEST_CASE("class G examples") {
  CHECK(is_class_G(cat::s_graph()));
  CHECK_FALSE(is_forcibly_class_G(cat::s_graph()));
  CHECK_FALSE(is_class_G(cat::r_graph()));
  CHECK(is_class_G(cat::cycle(5)));
  CHECK(is_forcibly_class_G(cat::cycle(5)));
}

TEST_CASE("hereditary unigraph examples") {
  CHECK_FALSE(is_hereditary_unigraph(DegreeSequence{3, 2, 2, 2, 1}));
  CHECK_FALSE(is_hereditary_unigraph(cat::four_pan()));
  CHECK_FALSE(is_hereditary_unigraph(cat::co_four_pan()));
  CHECK_FALSE(is_hereditary_unigraph(DegreeSequence{4, 2, 2, 2, 2, 2}));
  CHECK_FALSE(is_hereditary_unigraph(cat::u_graph(1)));
  for (int n = 1; n <= 9; ++n) {
    CHECK(is_hereditary_unigraph(cat::complete(n)));
    CHECK(is_hereditary_unigraph(DegreeSequence(std::vector<int>(static_cast<std::size_t>(n), n - 1))));
  }
  CHECK(is_hereditary_unigraph(cat::cycle(5)));
  CHECK(is_hereditary_unigraph(cat::matching(4)));
  CHECK(is_hereditary_unigraph(cat::star_plus_matching(3, 2)));
  CHECK(is_hereditary_unigraph(complement(cat::star_plus_matching(3, 2))));
  CHECK_THROWS_AS(hereditary_unigraph(DegreeSequence{1}, HuRoute::sequence_direct), DomainError);
  CHECK_THROWS_AS(hereditary_unigraph(DegreeSequence{1, 1}, HuRoute::forbidden), std::invalid_argument);
}

TEST_CASE("hereditary verdicts carry their evidence") {
  const auto f = hereditary_unigraph(cat::p5(), HuRoute::forbidden);
  CHECK_FALSE(f.member);
  REQUIRE(f.witness);
  CHECK(f.witness->pattern == "P5");

  const auto s = hereditary_unigraph(cat::spider_net(3), HuRoute::structural);
  CHECK(s.member);
  REQUIRE(s.components.size() == 1);
  CHECK(s.components[0].spider != nullptr);

  const auto d = hereditary_unigraph(DegreeSequence{2, 2, 2, 2, 2}, HuRoute::sequence_direct);
  CHECK(d.member);
  const auto bad = hereditary_unigraph(DegreeSequence{4, 2, 2, 2, 2, 2}, HuRoute::sequence_direct);
  CHECK_FALSE(bad.member);
  CHECK(bad.tail_failed);
}

TEST_CASE("allowed non-split tail forms") {
  using S = std::vector<int>;
  CHECK(hereditary_tail_form(S{2, 2, 2, 2, 2}) == std::optional<std::string>("C5"));
  CHECK(hereditary_tail_form(S{1, 1, 1, 1}) == std::optional<std::string>("rK2(2)"));
  CHECK(hereditary_tail_form(S{2, 2, 2, 2}) == std::optional<std::string>("co-rK2(2)"));
  CHECK(hereditary_tail_form(ts::sorted_degrees(cat::star_plus_matching(2, 1))) ==
        std::optional<std::string>("K1rSK2(2,1)"));
  CHECK(hereditary_tail_form(ts::sorted_degrees(complement(cat::star_plus_matching(2, 1)))) ==
        std::optional<std::string>("co-K1rSK2(2,1)"));
  CHECK(hereditary_tail_form(S{5, 5, 5, 5, 5}, 3) == std::optional<std::string>("C5"));
  CHECK_FALSE(hereditary_tail_form(S{4, 2, 2, 2, 2, 2}));
  CHECK_FALSE(hereditary_tail_form(S{}));
}

TEST_CASE("matrogenic and matroidal") {
  CHECK(is_matrogenic(cat::spider_net(3)));
  CHECK(is_matrogenic(cat::co_net(3)));
  CHECK(is_matroidal(cat::spider_net(3)));
  const Graph expanded = substitute(cat::spider_net(3), 3, cat::complete(2));
  CHECK(is_hereditary_unigraph(expanded));
  CHECK_FALSE(is_matrogenic(expanded));
  CHECK(is_matrogenic(cat::cycle(5)));
  CHECK_FALSE(is_matroidal(cat::cycle(5)));
  CHECK(matrogenic_by_sequence(DegreeSequence{2, 2, 2, 2, 2}));
  CHECK_FALSE(matroidal_by_sequence(DegreeSequence{2, 2, 2, 2, 2}));
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    // Random threshold graph: add isolated or dominating vertices.
    Graph g(0);
    const int n = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < n; ++i) {
      g = rng() % 2 ? join(g, cat::complete(1)) : disjoint_union(g, cat::complete(1));
    }
    CHECK(is_threshold(g));
    CHECK(is_matroidal(g));
    CHECK(is_matrogenic(g));
  }
}

TEST_CASE("classify examples") {
  const ClassReport c5 = classify(cat::cycle(5));
  CHECK(c5.pseudo_split.member);
  CHECK(c5.matrogenic.member);
  CHECK(c5.hereditary_unigraph.member);
  CHECK_FALSE(c5.threshold.member);
  CHECK_FALSE(c5.split.member);
  REQUIRE(c5.pseudo_split_partition);
  CHECK(c5.pseudo_split_partition->c.size() == 5);

  const ClassReport p5 = classify(cat::p5());
  CHECK_FALSE(p5.hereditary_unigraph.member);
  REQUIRE(p5.hereditary_unigraph.witness);
  CHECK(p5.hereditary_unigraph.witness->pattern == "P5");
  CHECK(p5.hereditary_unigraph.witness->embedding.size() == 5);

  const ClassReport k1 = classify(cat::complete(1));
  for (const ClassVerdict* v : {&k1.threshold, &k1.split, &k1.pseudo_split, &k1.chair_free, &k1.kite_free,
                                &k1.class_g, &k1.forcibly_class_g, &k1.matrogenic, &k1.matroidal,
                                &k1.hereditary_unigraph}) {
    CHECK(v->member);
  }
  CHECK(k1.unigraph_desk_scale == std::optional<bool>(true));
  CHECK(tower_violations(k1).empty());
}

TEST_CASE("split partitions are genuine") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const auto sp = split_partition(g);
      CHECK(sp.has_value() == ts::brute_split(g));
      if (sp) {
        CHECK(is_independent(g, sp->a));
        CHECK(is_clique(g, sp->b));
        CHECK(sp->a.size() + sp->b.size() == static_cast<std::size_t>(n));
      }
      const auto pp = pseudo_split_partition(g);
      if (pp) {
        CHECK(is_independent(g, pp->a));
        CHECK(is_clique(g, pp->b));
        CHECK((pp->c.empty() || pp->c.size() == 5));
        for (Vertex c : pp->c) {
          for (Vertex b : pp->b) CHECK(g.adjacent(c, b));
          for (Vertex a : pp->a) CHECK_FALSE(g.adjacent(c, a));
        }
      }
    }
  }
}

TEST_CASE("every recognizer matches brute-force forbidden subgraphs up to six vertices") {
  const auto threshold = with(k2k2_c4, {cat::path(4)});
  const auto split = with(k2k2_c4, {cat::cycle(5)});
  const auto chair = with(k2k2_c4, {cat::chair()});
  const auto kite = with(k2k2_c4, {cat::kite()});
  const auto g_list = with(k2k2_c4, {cat::r_graph(), cat::r_bar()});
  for (int n = 0; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const ClassReport r = classify(g);
      CHECK(r.threshold.member == brute_free(g, threshold));
      CHECK(r.split.member == brute_free(g, split));
      CHECK(r.pseudo_split.member == brute_free(g, k2k2_c4));
      CHECK(r.chair_free.member == brute_free(g, chair));
      CHECK(r.kite_free.member == brute_free(g, kite));
      CHECK(r.class_g.member == brute_free(g, g_list));
      CHECK(r.hereditary_unigraph.member == ts::brute_hereditary_unigraph(g));
      CHECK(r.unigraph_desk_scale == std::optional<bool>(ts::brute_unigraph(g)));
      CHECK(tower_violations(r).empty());
      if (!r.hereditary_unigraph.member) {
        REQUIRE(r.hereditary_unigraph.witness);
      }
      for (const ClassVerdict* v : {&r.threshold, &r.split, &r.pseudo_split, &r.class_g}) {
        CHECK(v->member == !v->witness.has_value());
      }
      // Sequence routes see the same answers.
      const DegreeSequence d = seq_of(g);
      CHECK(threshold_by_sequence(d) == r.threshold.member);
      CHECK(split_by_sequence(d) == r.split.member);
      CHECK(pseudo_split_by_sequence(d) == r.pseudo_split.member);
    }
  }
}

TEST_CASE("forcibly class G: the three formulations agree up to six vertices") {
  const auto g_patterns = cat::class_g_forbidden();
  for (int n = 0; n <= 6; ++n) {
    // Whether every labelled realization of each sequence is {2K2, C4, R, Rbar}-free.
    std::map<std::vector<int>, bool> all_free;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ts::pair_count(n)); ++mask) {
      const Graph h = ts::labelled(n, mask);
      auto [it, fresh] = all_free.emplace(ts::sorted_degrees(h), true);
      if (it->second) it->second = !find_forbidden(h, g_patterns);
    }
    for (const Graph& g : enumerate_graphs(n)) {
      const bool expect = all_free.at(ts::sorted_degrees(g));
      CHECK(is_forcibly_class_G(g) == expect);
      CHECK(forcibly_class_G_by_components(g) == expect);
      CHECK(is_forcibly_free(seq_of(g), g_patterns) == expect);
    }
  }
}

TEST_CASE("matrogenic routes agree and matroidal is matrogenic without C5") {
  for (int n = 0; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const DegreeSequence d = seq_of(g);
      const bool m = matrogenic_structural(g);
      CHECK(matrogenic_by_sequence(d) == m);
      CHECK(is_matroidal(g) == (m && !find_induced(g, cat::cycle(5))));
      CHECK(matroidal_by_sequence(d) == is_matroidal(g));
      if (m) CHECK(is_hereditary_unigraph(g));
    }
  }
}

TEST_CASE("all hereditary routes agree on random larger graphs") {
  std::mt19937_64 rng(52);
  int members = 0;
  for (int trial = 0; trial < 300; ++trial) {
    // Bias towards members: compose random small hereditary pieces.
    const int n = 6 + static_cast<int>(rng() % 7);
    const Graph g = ts::random_graph(rng, n, 0.1 * static_cast<double>(1 + rng() % 9));
    const bool f = hereditary_unigraph(g, HuRoute::forbidden).member;
    CHECK(hereditary_unigraph(g, HuRoute::structural).member == f);
    CHECK(hereditary_unigraph(g, HuRoute::sequence_components).member == f);
    CHECK(hereditary_unigraph(g, HuRoute::sequence_direct).member == f);
    members += f ? 1 : 0;
  }
  // Compositions of known members stay members.
  const SplittedGraph net(cat::spider_net(3), VertexSet{0, 1, 2}, VertexSet{3, 4, 5});
  const SplittedGraph top(substitute(cat::path(4), 2, cat::complete(3)), VertexSet{0, 5}, VertexSet{1, 2, 3, 4});
  for (const Graph& tail : {cat::cycle(5), cat::matching(3), complement(cat::matching(3)), cat::star_plus_matching(3, 1),
                            cat::complete(2)}) {
    const Graph g = compose(compose(net, top), tail);
    CHECK(is_hereditary_unigraph(g));
    CHECK(is_hereditary_unigraph(seq_of(g)));
  }
  MESSAGE("random members: " << members);
}
