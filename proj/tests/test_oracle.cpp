#include <doctest.h>

#include <set>

#include "support.hpp"
#include "unigraph/catalog.hpp"
#include "unigraph/errors.hpp"
#include "unigraph/isomorphism.hpp"
#include "unigraph/oracle.hpp"

using namespace unigraph;
namespace ts = testing_support;
namespace cat = unigraph::catalog;

TEST_CASE("class counts") {
  const std::vector<std::size_t> expect{1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) CHECK(enumerate_graphs(n).size() == expect[static_cast<std::size_t>(n)]);
  for (int n = 0; n <= 6; ++n) {
    CHECK(count_classes_labelled(n) == expect[static_cast<std::size_t>(n)]);
    CHECK(ts::brute_classes(n).size() == expect[static_cast<std::size_t>(n)]);
  }
  CHECK_THROWS_AS(enumerate_graphs(kMaxEnumerationVertices + 1), CapExceeded);
  CHECK_THROWS_AS(count_classes_labelled(7), CapExceeded);
}

TEST_CASE("enumeration yields pairwise non-isomorphic graphs in a stable order") {
  for (int n = 0; n <= 6; ++n) {
    std::set<std::string> brute;
    std::string previous;
    for (const Graph& g : enumerate_graphs(n)) {
      CHECK(g.order() == n);
      brute.insert(ts::brute_canonical(g));
      const std::string form = canonical_form(g);
      CHECK(previous < form);
      previous = form;
    }
    CHECK(brute.size() == enumerate_graphs(n).size());
  }
}

TEST_CASE("realizations of the named sequences") {
  const auto u = realizations(DegreeSequence{4, 2, 2, 2, 2, 2});
  REQUIRE(u.size() == 1);
  CHECK(ts::brute_isomorphic(u[0], cat::u_graph(1)));

  const auto pans = realizations(DegreeSequence{3, 2, 2, 2, 1});
  REQUIRE(pans.size() == 2);
  const bool first_is_pan = ts::brute_isomorphic(pans[0], cat::four_pan());
  CHECK(ts::brute_isomorphic(pans[first_is_pan ? 0 : 1], cat::four_pan()));
  CHECK(ts::brute_isomorphic(pans[first_is_pan ? 1 : 0], cat::co_four_pan()));

  const auto rs = realizations(DegreeSequence{4, 3, 3, 2, 1, 1});
  bool has_r = false;
  bool has_s = false;
  for (const Graph& g : rs) {
    has_r = has_r || ts::brute_isomorphic(g, cat::r_graph());
    has_s = has_s || ts::brute_isomorphic(g, cat::s_graph());
  }
  CHECK(has_r);
  CHECK(has_s);
  CHECK(count_realizations(DegreeSequence{4, 3, 3, 2, 1, 1}) == rs.size());
}

TEST_CASE("realization counts match brute force for every sequence up to six terms") {
  for (const auto& [d, count] : ts::brute_realization_counts()) {
    const DegreeSequence ds(d);
    const auto rs = realizations(ds);
    CHECK(rs.size() == static_cast<std::size_t>(count));
    CHECK(count_realizations(ds) == static_cast<std::size_t>(count));
    for (const Graph& g : rs) CHECK(ts::sorted_degrees(g) == d);
  }
}

TEST_CASE("realization edge cases") {
  CHECK(realizations(DegreeSequence{3, 3, 1, 1}).empty());
  CHECK(realizations(DegreeSequence{}).size() == 1);
  CHECK(realizations(DegreeSequence{4, 3, 3, 2, 1, 1}, 1).size() == 1);
  CHECK_THROWS_AS(realizations(DegreeSequence(std::vector<int>(9, 2))), CapExceeded);
  // Eight terms: every realization really has the degrees and they are distinct.
  const DegreeSequence d{4, 4, 3, 3, 2, 2, 2, 2};
  const auto rs = realizations(d);
  std::set<std::string> forms;
  for (const Graph& g : rs) {
    CHECK(ts::sorted_degrees(g) == d.terms());
    forms.insert(canonical_form(g));
  }
  CHECK(forms.size() == rs.size());
  std::size_t by_enumeration = 0;
  for (const Graph& g : enumerate_graphs(8)) by_enumeration += ts::sorted_degrees(g) == d.terms() ? 1 : 0;
  CHECK(rs.size() == by_enumeration);
}

TEST_CASE("unigraph oracles") {
  CHECK(is_unigraph_bruteforce(cat::u_graph(1)));
  CHECK_FALSE(is_hereditary_unigraph_bruteforce(cat::u_graph(1)));
  CHECK(is_unigraph_bruteforce(cat::matching(3)));
  CHECK(is_unigraph_bruteforce(cat::cycle(5)));
  CHECK_FALSE(is_unigraph_bruteforce(cat::four_pan()));
  CHECK_THROWS_AS(is_hereditary_unigraph_bruteforce(cat::complete(8)), CapExceeded);
  CHECK_FALSE(is_forcibly_free(DegreeSequence(cat::s_graph().degrees()), cat::class_g_forbidden()));
  CHECK(is_forcibly_free(DegreeSequence{2, 2, 2, 2, 2}, cat::class_g_forbidden()));
  for (int n = 0; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      CHECK(is_unigraph_bruteforce(g) == ts::brute_unigraph(g));
      CHECK(is_hereditary_unigraph_bruteforce(g) == ts::brute_hereditary_unigraph(g));
    }
  }
}
