#pragma once

// Independent reference implementations used as test oracles. None of these
// call into the library's canonical labeling, decomposition or sequence code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "unigraph/graph.hpp"

namespace testing_support {

using unigraph::Graph;
using unigraph::Vertex;

inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

/// Labelled graph on n vertices whose edge i (in (u<v) lexicographic order) is
/// present when bit i of mask is set.
inline Graph labelled(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Upper-triangle bit string of g relabeled so that vertex perm[i] gets label i.
inline std::string relabeled_key(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::string key;
  key.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) key.push_back(g.adjacent(perm[i], perm[j]) ? '1' : '0');
  }
  return key;
}

/// Lexicographically largest relabeled key over all n! orders.
inline std::string brute_canonical(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    best = std::max(best, relabeled_key(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(g.order()) + ":" + best;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         brute_canonical(a) == brute_canonical(b);
}

/// Does host contain pattern as an induced subgraph? Tries every subset of
/// the right size and every bijection onto it.
inline bool brute_contains_induced(const Graph& host, const Graph& pattern) {
  const int n = host.order();
  const int k = pattern.order();
  if (k > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::vector<bool> sel(static_cast<std::size_t>(n), false);
  std::fill(sel.begin(), sel.begin() + k, true);
  const std::string target = brute_canonical(pattern);
  do {
    std::vector<int> sub;
    for (int v = 0; v < n; ++v) {
      if (sel[static_cast<std::size_t>(v)]) sub.push_back(v);
    }
    Graph h(k);
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (host.adjacent(sub[static_cast<std::size_t>(i)], sub[static_cast<std::size_t>(j)])) h.add_edge(i, j);
      }
    }
    if (h.edge_count() == pattern.edge_count() && brute_canonical(h) == target) return true;
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return false;
}

/// Any partition of V into a clique and an independent set?
inline bool brute_split(const Graph& g) {
  const int n = g.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) {
        const bool bu = (mask >> u) & 1U;
        const bool bv = (mask >> v) & 1U;
        if (bu && bv && !g.adjacent(u, v)) ok = false;
        if (!bu && !bv && g.adjacent(u, v)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

/// Is g = (S, A, B) o H for some nonempty A u B and nonempty H? Tries all
/// 3^n labelings of vertices by A / B / H.
inline bool brute_decomposable(const Graph& g) {
  const int n = g.order();
  if (n < 2) return false;
  std::vector<int> side(static_cast<std::size_t>(n), 0);  // 0 = A, 1 = B, 2 = H
  auto at = [&](int v) { return side[static_cast<std::size_t>(v)]; };
  while (true) {
    bool has_h = false;
    bool has_s = false;
    for (int v = 0; v < n; ++v) (at(v) == 2 ? has_h : has_s) = true;
    if (has_h && has_s) {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        for (int v = u + 1; v < n && ok; ++v) {
          const int a = at(u);
          const int b = at(v);
          const bool e = g.adjacent(u, v);
          if (a == 0 && b == 0 && e) ok = false;
          if (a == 1 && b == 1 && !e) ok = false;
          if (((a == 1 && b == 2) || (a == 2 && b == 1)) && !e) ok = false;
          if (((a == 0 && b == 2) || (a == 2 && b == 0)) && e) ok = false;
        }
      }
      if (ok) return true;
    }
    int i = 0;
    while (i < n && side[static_cast<std::size_t>(i)] == 2) side[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++side[static_cast<std::size_t>(i)];
  }
  return false;
}

/// Slack of every Erdos-Gallai inequality, computed term by term.
inline std::vector<long long> naive_slack(std::vector<int> d) {
  std::sort(d.rbegin(), d.rend());
  const int n = static_cast<int>(d.size());
  std::vector<long long> slack;
  for (int k = 0; k <= n; ++k) {
    long long lhs = 0;
    long long rhs = static_cast<long long>(k) * (k - 1);
    for (int i = 0; i < k; ++i) lhs += d[static_cast<std::size_t>(i)];
    for (int i = k; i < n; ++i) rhs += std::min(k, d[static_cast<std::size_t>(i)]);
    slack.push_back(rhs - lhs);
  }
  return slack;
}

/// Havel-Hakimi graphicality.
inline bool havel_hakimi(std::vector<int> d) {
  while (true) {
    std::sort(d.rbegin(), d.rend());
    while (!d.empty() && d.back() == 0) d.pop_back();
    if (d.empty()) return true;
    const int top = d.front();
    if (top < 0 || top >= static_cast<int>(d.size())) return false;
    d.erase(d.begin());
    for (int i = 0; i < top; ++i) {
      if (--d[static_cast<std::size_t>(i)] < 0) return false;
    }
  }
}

inline std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d = g.degrees();
  std::sort(d.rbegin(), d.rend());
  return d;
}

/// Distinct isomorphism classes among all labelled graphs on n vertices,
/// by brute canonical keys (n <= 6).
inline std::vector<Graph> brute_classes(int n) {
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
    Graph g = labelled(n, mask);
    if (seen.insert(brute_canonical(g)).second) out.push_back(g);
  }
  return out;
}

/// Number of isomorphism classes realizing each degree sequence (descending)
/// on at most max_n <= 6 vertices, by brute force over labelled graphs.
inline const std::map<std::vector<int>, int>& brute_realization_counts(int max_n = 6) {
  static std::map<int, std::map<std::vector<int>, int>> cache;
  auto& table = cache[max_n];
  if (!table.empty()) return table;
  for (int n = 0; n <= max_n; ++n) {
    std::map<std::vector<int>, std::set<std::string>> by_sequence;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
      const Graph g = labelled(n, mask);
      by_sequence[sorted_degrees(g)].insert(brute_canonical(g));
    }
    for (auto& [d, keys] : by_sequence) table[d] = static_cast<int>(keys.size());
  }
  return table;
}

inline bool brute_unigraph(const Graph& g) {
  return brute_realization_counts().at(sorted_degrees(g)) == 1;
}

/// Every induced subgraph is a unigraph (n <= 6).
inline bool brute_hereditary_unigraph(const Graph& g) {
  const int n = g.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> keep;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) keep.push_back(v);
    }
    if (!brute_unigraph(unigraph::induced(g, unigraph::VertexSet(keep)))) return false;
  }
  return true;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    }
  }
  return h;
}

}  // namespace testing_support
