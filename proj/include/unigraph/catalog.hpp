#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unigraph/graph.hpp"
#include "unigraph/isomorphism.hpp"

/// Named graphs with fixed vertex numbering.
///
/// Numbering conventions:
///  - path(n), cycle(n): consecutive vertices adjacent (cycle also n-1 ~ 0).
///  - complete_bipartite(m, n): parts {0..m-1} and {m..m+n-1}.
///  - chair: 0 centre, 1 its path neighbour, 2 end of that path, 3 and 4 leaves.
///  - four_pan: 0..3 the 4-cycle, 4 pendant on 0.
///  - spider_net(k): feet 0..k-1, body k..2k-1, foot i ~ body k+i.
///  - r_graph: 0 W, 1 Z, 2 top-right, 3 bottom-left, 4 bottom-middle,
///    5 bottom-right (reading order of the two drawn rows). Split with
///    independent set {0, 2, 3} and clique {1, 4, 5}.
///  - s_graph: 0 and 1 the two pendants, 2 their common neighbour, 3 and 4 the
///    triangle partners of 2, 5 the vertex joined to 3 and 4.
///  - u_graph(s): 0 the merged vertex, 1..3 rest of the C4 (1 ~ 2 ~ 3),
///    then triangle pairs (4,5), (6,7), ...
///  - star_plus_matching(r, s): 0 centre, 1..r leaves, then s edges.
/// Complements ("co" names) keep the numbering of the base graph.
namespace unigraph::catalog {

Graph empty_graph(int n);
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete_bipartite(int m, int n);
Graph chair();
Graph kite();
Graph four_pan();
Graph co_four_pan();
Graph r_graph();
Graph r_bar();
Graph s_graph();
Graph s_bar();
/// C4 + sK3 with one vertex from each component merged; s >= 1.
Graph u_graph(int s);
/// Thin headless prime spider with k >= 2 feet.
Graph spider_net(int k);
Graph co_net(int k);
Graph two_p3();
Graph co_two_p3();
Graph k2_plus_k3();
Graph k2_plus_p4();
Graph co_k2_plus_p4();
Graph k2_plus_c4();
Graph co_k2_plus_c4();
Graph k23();
Graph p5();
Graph co_p5();
/// r disjoint edges.
Graph matching(int r);
/// K_{1,r} + sK_2.
Graph star_plus_matching(int r, int s);

/// Builds a catalog graph from its stable name, e.g. "chair", "net(3)",
/// "Us(2)", "Kmn(2,3)", "K1rSK2(2,1)". Throws std::invalid_argument.
Graph by_name(std::string_view text);

/// The stable names accepted by by_name (parameterised names shown with
/// their argument list).
std::vector<std::string> names();

// Forbidden-subgraph families.
std::vector<NamedPattern> threshold_forbidden();            // 2K2, C4, P4
std::vector<NamedPattern> split_forbidden();                // 2K2, C4, C5
std::vector<NamedPattern> pseudo_split_forbidden();         // 2K2, C4
std::vector<NamedPattern> chair_free_forbidden();           // 2K2, C4, chair
std::vector<NamedPattern> kite_free_forbidden();            // 2K2, C4, kite
std::vector<NamedPattern> class_g_forbidden();              // 2K2, C4, R, Rbar
std::vector<NamedPattern> forcibly_class_g_forbidden();     // ... plus S, Sbar
std::vector<NamedPattern> hereditary_unigraph_forbidden();  // the sixteen graphs

}  // namespace unigraph::catalog
