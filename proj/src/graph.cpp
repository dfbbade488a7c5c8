#include "unigraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>
#include <string>

#include "unigraph/errors.hpp"

namespace unigraph {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  std::vector<Vertex> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return VertexSet(std::move(out));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::check_within(int n) const {
  for (Vertex v : members_) {
    if (v < 0 || v >= n) {
      throw InvalidVertex("vertex " + std::to_string(v) + " not in 0.." +
                          std::to_string(n - 1));
    }
  }
}

std::uint64_t VertexSet::mask() const {
  std::uint64_t m = 0;
  for (Vertex v : members_) m |= std::uint64_t{1} << v;
  return m;
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw InvalidVertex("vertex " + std::to_string(v) + " not in 0.." + std::to_string(n_ - 1));
  }
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (row_ptr(u)[v / 64] >> (v % 64)) & 1U;
}

void Graph::set_edge(Vertex u, Vertex v, bool present) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  const std::uint64_t bu = std::uint64_t{1} << (u % 64);
  const std::uint64_t bv = std::uint64_t{1} << (v % 64);
  if (present) {
    row_ptr(u)[v / 64] |= bv;
    row_ptr(v)[u / 64] |= bu;
  } else {
    row_ptr(u)[v / 64] &= ~bv;
    row_ptr(v)[u / 64] &= ~bu;
  }
}

void Graph::add_edge(Vertex u, Vertex v) { set_edge(u, v, true); }
void Graph::remove_edge(Vertex u, Vertex v) { set_edge(u, v, false); }

int Graph::degree(Vertex v) const {
  check_vertex(v);
  int d = 0;
  const std::uint64_t* r = row_ptr(v);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = degree(v);
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  auto d = degrees();
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  const std::uint64_t* r = row_ptr(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits != 0) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t Graph::row_mask(Vertex v) const {
  check_vertex(v);
  if (n_ > 64) throw CapExceeded("row_mask requires at most 64 vertices");
  return row_ptr(v)[0];
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  check_vertex(v);
  return {row_ptr(v), static_cast<std::size_t>(words_)};
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  const int shift = g.order();
  for (auto [u, v] : h.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  }
  return out;
}

Graph induced_ordered(const Graph& g, std::span<const Vertex> order) {
  const int k = static_cast<int>(order.size());
  for (Vertex v : order) g.check_vertex(v);
  Graph out(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (order[i] == order[j]) throw std::invalid_argument("repeated vertex in induced order");
      if (g.adjacent(order[i], order[j])) out.add_edge(i, j);
    }
  }
  return out;
}

Graph induced(const Graph& g, const VertexSet& w) {
  w.check_within(g.order());
  return induced_ordered(g, w.members());
}

Graph permuted(const Graph& g, std::span<const Vertex> order) {
  if (static_cast<int>(order.size()) != g.order()) {
    throw std::invalid_argument("permutation length differs from vertex count");
  }
  return induced_ordered(g, order);
}

Graph substitute(const Graph& j, Vertex v, const Graph& h) {
  j.check_vertex(v);
  const int hn = h.order();
  const int n = j.order() - 1 + hn;
  // Position of each old vertex of j (other than v) in the result.
  auto place = [&](Vertex u) { return u < v ? u : u - 1 + hn; };
  Graph out(n);
  for (auto [a, b] : j.edges()) {
    if (a == v || b == v) continue;
    out.add_edge(place(a), place(b));
  }
  for (auto [a, b] : h.edges()) out.add_edge(v + a, v + b);
  for (Vertex u : j.neighbors(v)) {
    for (int x = 0; x < hn; ++x) out.add_edge(place(u), v + x);
  }
  return out;
}

bool is_module(const Graph& g, const VertexSet& m) {
  m.check_within(g.order());
  if (m.empty()) return true;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (m.contains(x)) continue;
    const bool first = g.adjacent(x, m.front());
    for (Vertex y : m) {
      if (g.adjacent(x, y) != first) return false;
    }
  }
  return true;
}

Graph contract_module(const Graph& g, const VertexSet& m) {
  m.check_within(g.order());
  if (m.empty()) throw NotAModule("cannot contract an empty set");
  if (!is_module(g, m)) throw NotAModule("vertex set is not a module");
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == m.front() || !m.contains(v)) keep.push_back(v);
  }
  return induced_ordered(g, keep);
}

namespace {

// Smallest module containing `seed`.
std::uint64_t module_closure(const Graph& g, std::uint64_t seed) {
  const int n = g.order();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uint64_t m = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    std::uint64_t outside = all & ~m;
    while (outside != 0) {
      const Vertex x = std::countr_zero(outside);
      outside &= outside - 1;
      const std::uint64_t hits = g.row_mask(x) & m;
      if (hits != 0 && hits != m) {
        m |= std::uint64_t{1} << x;
        grew = true;
      }
    }
  }
  return m;
}

}  // namespace

std::vector<VertexSet> maximal_proper_modules(const Graph& g) {
  const int n = g.order();
  if (n > kMaxModuleSearchVertices) {
    throw CapExceeded("maximal_proper_modules supports at most " +
                      std::to_string(kMaxModuleSearchVertices) + " vertices");
  }
  if (n <= 1) return {};
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;

  // Grow proper modules one vertex (plus closure) at a time; a module is
  // maximal exactly when every such growth reaches V(G).
  std::set<std::uint64_t> seen;
  std::queue<std::uint64_t> frontier;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint64_t m = module_closure(g, (std::uint64_t{1} << u) | (std::uint64_t{1} << v));
      if (m != all && seen.insert(m).second) frontier.push(m);
    }
  }
  std::vector<std::uint64_t> maximal;
  while (!frontier.empty()) {
    const std::uint64_t m = frontier.front();
    frontier.pop();
    bool is_max = true;
    std::uint64_t outside = all & ~m;
    while (outside != 0) {
      const Vertex x = std::countr_zero(outside);
      outside &= outside - 1;
      const std::uint64_t grown = module_closure(g, m | (std::uint64_t{1} << x));
      if (grown != all) {
        is_max = false;
        if (seen.insert(grown).second) frontier.push(grown);
      }
    }
    if (is_max) maximal.push_back(m);
  }

  std::uint64_t covered = 0;
  for (std::uint64_t m : maximal) covered |= m;
  for (Vertex v = 0; v < n; ++v) {
    if (!((covered >> v) & 1U)) maximal.push_back(std::uint64_t{1} << v);
  }
  std::vector<VertexSet> out;
  out.reserve(maximal.size());
  for (std::uint64_t m : maximal) out.push_back(VertexSet::from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  s.check_within(g.order());
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!g.adjacent(m[i], m[j])) return false;
    }
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  s.check_within(g.order());
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (g.adjacent(m[i], m[j])) return false;
    }
  }
  return true;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace unigraph
