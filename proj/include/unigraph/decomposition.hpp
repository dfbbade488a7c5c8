#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "unigraph/degree_sequence.hpp"
#include "unigraph/graph.hpp"

namespace unigraph {

/// A split graph together with a chosen partition into an independent set A
/// and a clique B.
class SplittedGraph {
 public:
  /// Throws std::invalid_argument unless a, b partition V(g), a is
  /// independent and b is a clique.
  SplittedGraph(Graph g, VertexSet a, VertexSet b);

  /// K1 whose vertex sits in the clique (dominating when composed).
  static SplittedGraph dominating_vertex();
  /// K1 whose vertex sits in the independent set (isolated when composed).
  static SplittedGraph isolated_vertex();

  const Graph& graph() const { return g_; }
  const VertexSet& a() const { return a_; }
  const VertexSet& b() const { return b_; }
  int order() const { return g_.order(); }

  /// 0 for members of A, 1 for members of B; used for coloured isomorphism.
  std::vector<int> side_colours() const;

 private:
  Graph g_;
  VertexSet a_;
  VertexSet b_;
};

/// (G,A,B) ∘ H: s's vertices first, then h's; B is made complete to V(h).
Graph compose(const SplittedGraph& s, const Graph& h);
/// Composition of two splitted graphs, itself splitted by the unions of the
/// independent sets and of the cliques.
SplittedGraph compose(const SplittedGraph& s, const SplittedGraph& h);

/// True for a single vertex, or when every vertex pair is joined by a chain of
/// overlapping induced 2K2 / C4 / P4 subgraphs. O(n^4).
bool is_indecomposable(const Graph& g);

struct DecompositionComponent {
  SplittedGraph part;
  std::vector<Vertex> vertices;            // local vertex i is source vertex vertices[i]
  std::optional<std::pair<int, int>> slot; // consecutive EG terms (k, k') owning the clique
};

struct TailComponent {
  Graph graph;
  std::vector<Vertex> vertices;
};

/// (G_k,A_k,B_k) ∘ ... ∘ (G_1,A_1,B_1) ∘ G_0, outermost component first.
/// The tail holds G_0 only when it is not split; a split G_0 is stored as the
/// last component with the clique formed by its highest-degree vertices.
struct CanonicalDecomposition {
  std::vector<DecompositionComponent> components;
  std::optional<TailComponent> tail;

  int source_order() const;
};

/// Reads the decomposition off the degree order and the EG profile: the
/// clique of each splitted component is a run v_{k+1..k'} of the degree order
/// for consecutive EG terms k < k', and its independent set is every vertex of
/// degree strictly between k and k'. Ties in degree are broken by index.
CanonicalDecomposition decompose(const Graph& g);

/// Rebuilds the graph on the source labels.
Graph recompose(const CanonicalDecomposition& cd);

/// Component-wise complement with the roles of A and B exchanged.
CanonicalDecomposition complement_decomposition(const CanonicalDecomposition& cd);

/// Same shape up to isomorphism: splitted components match as splitted graphs
/// in order, except the innermost split component, whose partition is not
/// canonical and is compared as a plain graph; tails match as graphs.
bool equivalent(const CanonicalDecomposition& x, const CanonicalDecomposition& y);

/// Degrees inside one split component. The parts are views into a buffer
/// shared by all components of one decomposition.
struct SequenceComponent {
  std::shared_ptr<const std::vector<int>> storage;
  std::size_t b_begin = 0;
  std::size_t b_size = 0;
  std::size_t a_begin = 0;
  std::size_t a_size = 0;
  std::optional<std::pair<int, int>> slot;

  std::span<const int> b_part() const { return {storage->data() + b_begin, b_size}; }  // descending
  std::span<const int> a_part() const { return {storage->data() + a_begin, a_size}; }  // descending
  int order() const { return static_cast<int>(a_size + b_size); }
  std::vector<int> sequence() const;
  bool trivial() const { return order() == 1; }
};

struct SequenceDecomposition {
  std::vector<int> eg;
  int t = 0;
  std::vector<SequenceComponent> components;  // outermost first, same order as decompose()
  std::optional<std::vector<int>> tail;       // non-split G_0 degrees, descending
};

/// Degree sequences of the canonical components, in O(n) from the profile.
/// Throws DomainError if d is not graphic.
SequenceDecomposition decompose_sequence(const DegreeSequence& d);
SequenceDecomposition decompose_sequence(const DegreeSequence& d, const EGProfile& profile);

}  // namespace unigraph
