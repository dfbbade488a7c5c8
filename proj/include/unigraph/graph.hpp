#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace unigraph {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex indices of some host graph.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  /// Members of the bitmask `mask` (bit i set means vertex i is present).
  static VertexSet from_mask(std::uint64_t mask);

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Vertex front() const { return members_.front(); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  /// Throws InvalidVertex if any member is outside 0..n-1.
  void check_within(int n) const;

  /// Bitmask form; only valid when every member is < 64.
  std::uint64_t mask() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as bit-packed rows of ceil(n/64) machine words, so a
/// graph with at most 64 vertices keeps each row in a single word. Rows are
/// kept symmetric and irreflexive by every mutator.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<Edge> edges);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t edge_count() const;

  bool adjacent(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void set_edge(Vertex u, Vertex v, bool present);

  int degree(Vertex v) const;
  std::vector<int> degrees() const;
  /// Degrees sorted in descending order.
  std::vector<int> degree_sequence() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  /// Single-word row; requires order() <= 64.
  std::uint64_t row_mask(Vertex v) const;
  std::span<const std::uint64_t> row(Vertex v) const;
  int words_per_row() const { return words_; }

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::uint64_t* row_ptr(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  const std::uint64_t* row_ptr(Vertex v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

Graph complement(const Graph& g);
/// g's vertices first, then h's shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

/// G[W]; vertex i of the result is the i-th smallest member of w.
Graph induced(const Graph& g, const VertexSet& w);
/// Induced subgraph in the given vertex order (members must be distinct).
Graph induced_ordered(const Graph& g, std::span<const Vertex> order);

/// Relabel so that new vertex i is old vertex order[i]; order must be a permutation.
Graph permuted(const Graph& g, std::span<const Vertex> order);

/// Replace v by a copy of h whose vertices are all joined to N_j(v).
/// h occupies positions v..v+|h|-1 of the result; later vertices of j shift up.
Graph substitute(const Graph& j, Vertex v, const Graph& h);

bool is_module(const Graph& g, const VertexSet& m);
/// Keeps the smallest member of m and deletes the others.
Graph contract_module(const Graph& g, const VertexSet& m);

inline constexpr int kMaxModuleSearchVertices = 16;

/// Inclusion-maximal modules M with 1 <= |M| < n. Singletons appear only when
/// no larger proper module contains them. Brute force, n <= 16.
std::vector<VertexSet> maximal_proper_modules(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

}  // namespace unigraph
