#include <doctest.h>

#include "support.hpp"
#include "unigraph/catalog.hpp"
#include "unigraph/graph.hpp"

using namespace unigraph;
namespace ts = testing_support;
namespace cat = unigraph::catalog;

using Seq = std::vector<int>;

TEST_CASE("degree sequences of named graphs") {
  CHECK(ts::sorted_degrees(cat::chair()) == Seq{3, 2, 1, 1, 1});
  CHECK(ts::sorted_degrees(cat::kite()) == Seq{3, 3, 3, 2, 1});
  CHECK(ts::sorted_degrees(cat::four_pan()) == Seq{3, 2, 2, 2, 1});
  CHECK(ts::sorted_degrees(cat::co_four_pan()) == Seq{3, 2, 2, 2, 1});
  CHECK(ts::sorted_degrees(cat::spider_net(3)) == Seq{3, 3, 3, 1, 1, 1});
  CHECK(ts::sorted_degrees(cat::r_graph()) == Seq{4, 3, 3, 2, 1, 1});
  CHECK(ts::sorted_degrees(cat::s_graph()) == Seq{4, 3, 3, 2, 1, 1});
  CHECK(ts::sorted_degrees(cat::complete_bipartite(2, 3)) == Seq{3, 3, 2, 2, 2});
}

TEST_CASE("U_s is C4 + sK3 with one vertex of each component merged") {
  for (int s = 1; s <= 4; ++s) {
    const Graph u = cat::u_graph(s);
    CHECK(u.order() == 2 * s + 4);
    Seq expect{2 * s + 2};
    expect.insert(expect.end(), static_cast<std::size_t>(2 * s + 3), 2);
    CHECK(ts::sorted_degrees(u) == expect);
    // Removing the merged vertex leaves P3 + sK2.
    std::vector<Vertex> rest;
    for (int v = 1; v < u.order(); ++v) rest.push_back(v);
    const Graph r = induced(u, VertexSet(rest));
    CHECK(ts::brute_isomorphic(r, disjoint_union(cat::path(3), cat::matching(s))));
  }
}

TEST_CASE("complement pairs") {
  CHECK(ts::brute_isomorphic(cat::co_four_pan(), complement(cat::four_pan())));
  CHECK(ts::brute_isomorphic(cat::r_bar(), complement(cat::r_graph())));
  CHECK(ts::brute_isomorphic(cat::s_bar(), complement(cat::s_graph())));
  CHECK(ts::brute_isomorphic(cat::co_p5(), complement(cat::p5())));
  CHECK(ts::brute_isomorphic(cat::co_two_p3(), complement(cat::two_p3())));
  CHECK(ts::brute_isomorphic(cat::co_k2_plus_p4(), complement(cat::k2_plus_p4())));
  CHECK(ts::brute_isomorphic(cat::co_k2_plus_c4(), complement(cat::k2_plus_c4())));
  CHECK(ts::brute_isomorphic(cat::co_net(3), complement(cat::spider_net(3))));
  CHECK(ts::brute_isomorphic(cat::kite(), complement(cat::chair())));
}

TEST_CASE("R is split on the documented partition") {
  const Graph r = cat::r_graph();
  CHECK(is_independent(r, VertexSet{0, 2, 3}));
  CHECK(is_clique(r, VertexSet{1, 4, 5}));
}

TEST_CASE("the sixteen forbidden graphs") {
  const auto f = cat::hereditary_unigraph_forbidden();
  REQUIRE(f.size() == 16);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      CHECK_FALSE(ts::brute_isomorphic(f[i].graph, f[j].graph));
    }
  }
  // The list is closed under complementation.
  for (const auto& p : f) {
    bool found = false;
    for (const auto& q : f) found = found || ts::brute_isomorphic(complement(p.graph), q.graph);
    CHECK_MESSAGE(found, p.name);
  }
  // Only R, Rbar, S, Sbar are split.
  int split = 0;
  for (const auto& p : f) split += ts::brute_split(p.graph) ? 1 : 0;
  CHECK(split == 4);
  for (const Graph& g : {cat::r_graph(), cat::r_bar(), cat::s_graph(), cat::s_bar()}) CHECK(ts::brute_split(g));
  // Each one induces 2K2, C4, R, Rbar, S or Sbar.
  const std::vector<Graph> core{cat::matching(2), cat::cycle(4), cat::r_graph(), cat::r_bar(), cat::s_graph(), cat::s_bar()};
  for (const auto& p : f) {
    bool hit = false;
    for (const Graph& c : core) hit = hit || ts::brute_contains_induced(p.graph, c);
    CHECK_MESSAGE(hit, p.name);
  }
}

TEST_CASE("pattern families") {
  auto names_of = [](const std::vector<NamedPattern>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.name);
    return out;
  };
  CHECK(cat::threshold_forbidden().size() == 3);
  CHECK(cat::split_forbidden().size() == 3);
  CHECK(cat::pseudo_split_forbidden().size() == 2);
  CHECK(cat::class_g_forbidden().size() == 4);
  CHECK(cat::forcibly_class_g_forbidden().size() == 6);
  CHECK(names_of(cat::pseudo_split_forbidden()) == std::vector<std::string>{"2K2", "C4"});
}

TEST_CASE("by_name accepts every listed name") {
  CHECK(cat::by_name("chair") == cat::chair());
  CHECK(cat::by_name("net(3)") == cat::spider_net(3));
  CHECK(cat::by_name("Us(2)") == cat::u_graph(2));
  CHECK(cat::by_name("Kmn(2,3)") == cat::complete_bipartite(2, 3));
  CHECK(cat::by_name("K1rSK2(2,1)") == cat::star_plus_matching(2, 1));
  CHECK_THROWS_AS(cat::by_name("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(cat::by_name("net(1)"), std::invalid_argument);
  CHECK(cat::names().size() >= 20);
}
