#include "unigraph/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "unigraph/errors.hpp"
#include "unigraph/isomorphism.hpp"

namespace unigraph {

SplittedGraph::SplittedGraph(Graph g, VertexSet a, VertexSet b)
    : g_(std::move(g)), a_(std::move(a)), b_(std::move(b)) {
  a_.check_within(g_.order());
  b_.check_within(g_.order());
  if (a_.size() + b_.size() != static_cast<std::size_t>(g_.order())) {
    throw std::invalid_argument("A and B must partition the vertex set");
  }
  for (Vertex v : a_) {
    if (b_.contains(v)) throw std::invalid_argument("A and B overlap");
  }
  if (!is_independent(g_, a_)) throw std::invalid_argument("A is not an independent set");
  if (!is_clique(g_, b_)) throw std::invalid_argument("B is not a clique");
}

SplittedGraph SplittedGraph::dominating_vertex() { return SplittedGraph(Graph(1), {}, {0}); }
SplittedGraph SplittedGraph::isolated_vertex() { return SplittedGraph(Graph(1), {0}, {}); }

std::vector<int> SplittedGraph::side_colours() const {
  std::vector<int> c(static_cast<std::size_t>(g_.order()), 0);
  for (Vertex v : b_) c[static_cast<std::size_t>(v)] = 1;
  return c;
}

Graph compose(const SplittedGraph& s, const Graph& h) {
  Graph out = disjoint_union(s.graph(), h);
  const int shift = s.order();
  for (Vertex b : s.b()) {
    for (Vertex v = 0; v < h.order(); ++v) out.add_edge(b, shift + v);
  }
  return out;
}

SplittedGraph compose(const SplittedGraph& s, const SplittedGraph& h) {
  Graph g = compose(s, h.graph());
  std::vector<Vertex> a(s.a().begin(), s.a().end());
  std::vector<Vertex> b(s.b().begin(), s.b().end());
  for (Vertex v : h.a()) a.push_back(s.order() + v);
  for (Vertex v : h.b()) b.push_back(s.order() + v);
  return SplittedGraph(std::move(g), VertexSet(std::move(a)), VertexSet(std::move(b)));
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

// 2K2, C4 and P4 are exactly the 4-vertex graphs whose degree multiset is
// {1,1,1,1}, {2,2,2,2} or {1,1,2,2}.
bool is_a4_shape(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
  const Vertex q[4] = {a, b, c, d};
  int deg[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (g.adjacent(q[i], q[j])) {
        ++deg[i];
        ++deg[j];
      }
    }
  }
  std::sort(deg, deg + 4);
  const bool two_k2 = deg[0] == 1 && deg[3] == 1;
  const bool c4 = deg[0] == 2 && deg[3] == 2;
  const bool p4 = deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2;
  return two_k2 || c4 || p4;
}

std::vector<Vertex> merged_sorted(const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
  std::vector<Vertex> out(x);
  out.insert(out.end(), y.begin(), y.end());
  std::sort(out.begin(), out.end());
  return out;
}

DecompositionComponent make_component(const Graph& g, const std::vector<Vertex>& a_src,
                                      const std::vector<Vertex>& b_src,
                                      std::optional<std::pair<int, int>> slot) {
  std::vector<Vertex> members = merged_sorted(a_src, b_src);
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(members.begin(), members.end(), v) - members.begin());
  };
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  for (Vertex v : a_src) a.push_back(local(v));
  for (Vertex v : b_src) b.push_back(local(v));
  Graph part = induced_ordered(g, members);
  return {SplittedGraph(std::move(part), VertexSet(std::move(a)), VertexSet(std::move(b))),
          std::move(members), slot};
}

}  // namespace

bool is_indecomposable(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  DisjointSets sets(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        for (Vertex d = c + 1; d < n; ++d) {
          if (is_a4_shape(g, a, b, c, d)) {
            sets.unite(a, b);
            sets.unite(a, c);
            sets.unite(a, d);
          }
        }
      }
    }
  }
  const int root = sets.find(0);
  for (Vertex v = 1; v < n; ++v) {
    if (sets.find(v) != root) return false;
  }
  return true;
}

int CanonicalDecomposition::source_order() const {
  int n = tail ? tail->graph.order() : 0;
  for (const auto& c : components) n += c.part.order();
  return n;
}

CanonicalDecomposition decompose(const Graph& g) {
  const int n = g.order();
  const auto deg = g.degrees();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
    return deg[static_cast<std::size_t>(x)] > deg[static_cast<std::size_t>(y)];
  });
  std::vector<int> sorted_deg(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sorted_deg[static_cast<std::size_t>(i)] = deg[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
  const DegreeSequence d(sorted_deg);
  const EGProfile prof = eg_profile(d);
  const int t = prof.t();

  // 0-based positions in `order` whose degree lies in [lo, hi).
  auto positions = [&](int lo, int hi) {
    return std::pair{prof.conj(hi), prof.conj(lo)};
  };

  CanonicalDecomposition cd;
  std::vector<char> assigned(static_cast<std::size_t>(n), 0);
  auto claim = [&](Vertex v) {
    if (assigned[static_cast<std::size_t>(v)]) {
      throw std::logic_error("degree-order decomposition assigned a vertex twice");
    }
    assigned[static_cast<std::size_t>(v)] = 1;
  };

  for (std::size_t idx = 0; idx < prof.eg.size(); ++idx) {
    const int k = prof.eg[idx];
    // Vertices of degree exactly k outside every clique are isolated-type K1s.
    const auto [eq_begin, eq_end] = positions(k, k + 1);
    for (int p = std::max(eq_begin, t); p < eq_end; ++p) {
      const Vertex v = order[static_cast<std::size_t>(p)];
      claim(v);
      cd.components.push_back(make_component(g, {v}, {}, std::nullopt));
    }
    if (idx + 1 == prof.eg.size()) break;
    const int k2 = prof.eg[idx + 1];
    std::vector<Vertex> b(order.begin() + k, order.begin() + k2);
    std::vector<Vertex> a;
    const auto [a_begin, a_end] = positions(k + 1, k2);
    for (int p = a_begin; p < a_end; ++p) a.push_back(order[static_cast<std::size_t>(p)]);
    for (Vertex v : b) claim(v);
    for (Vertex v : a) claim(v);
    cd.components.push_back(make_component(g, a, b, std::pair{k, k2}));
  }

  std::vector<Vertex> tail;
  for (int p = t; p < prof.conj(t + 1); ++p) tail.push_back(order[static_cast<std::size_t>(p)]);
  if (!tail.empty()) {
    for (Vertex v : tail) claim(v);
    std::sort(tail.begin(), tail.end());
    cd.tail = TailComponent{induced_ordered(g, tail), tail};
  }
  if (std::find(assigned.begin(), assigned.end(), 0) != assigned.end()) {
    throw std::logic_error("degree-order decomposition left a vertex unassigned");
  }
  return cd;
}

Graph recompose(const CanonicalDecomposition& cd) {
  const int n = cd.source_order();
  // Use the recorded source labels when they form a permutation of 0..n-1.
  std::vector<std::vector<Vertex>> labels;
  for (const auto& c : cd.components) labels.push_back(c.vertices);
  if (cd.tail) labels.push_back(cd.tail->vertices);
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  bool use_source = true;
  for (std::size_t i = 0; i < labels.size() && use_source; ++i) {
    const int expected = i < cd.components.size() ? cd.components[i].part.order() : cd.tail->graph.order();
    if (static_cast<int>(labels[i].size()) != expected) use_source = false;
    for (Vertex v : labels[i]) {
      if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) {
        use_source = false;
        break;
      }
      hit[static_cast<std::size_t>(v)] = 1;
    }
  }
  if (!use_source) {
    Vertex next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const int size = i < cd.components.size() ? cd.components[i].part.order() : cd.tail->graph.order();
      labels[i].resize(static_cast<std::size_t>(size));
      std::iota(labels[i].begin(), labels[i].end(), next);
      next += size;
    }
  }

  Graph out(n);
  for (std::size_t i = 0; i < cd.components.size(); ++i) {
    const auto& part = cd.components[i].part;
    const auto& lab = labels[i];
    for (auto [u, v] : part.graph().edges()) {
      out.add_edge(lab[static_cast<std::size_t>(u)], lab[static_cast<std::size_t>(v)]);
    }
    for (Vertex b : part.b()) {
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        for (Vertex w : labels[j]) out.add_edge(lab[static_cast<std::size_t>(b)], w);
      }
    }
  }
  if (cd.tail) {
    const auto& lab = labels.back();
    for (auto [u, v] : cd.tail->graph.edges()) {
      out.add_edge(lab[static_cast<std::size_t>(u)], lab[static_cast<std::size_t>(v)]);
    }
  }
  return out;
}

CanonicalDecomposition complement_decomposition(const CanonicalDecomposition& cd) {
  CanonicalDecomposition out;
  for (const auto& c : cd.components) {
    out.components.push_back(
        {SplittedGraph(complement(c.part.graph()), c.part.b(), c.part.a()), c.vertices, std::nullopt});
  }
  if (cd.tail) out.tail = TailComponent{complement(cd.tail->graph), cd.tail->vertices};
  return out;
}

bool equivalent(const CanonicalDecomposition& x, const CanonicalDecomposition& y) {
  if (x.components.size() != y.components.size()) return false;
  if (x.tail.has_value() != y.tail.has_value()) return false;
  if (x.tail && !is_isomorphic(x.tail->graph, y.tail->graph)) return false;
  for (std::size_t i = 0; i < x.components.size(); ++i) {
    const auto& p = x.components[i].part;
    const auto& q = y.components[i].part;
    const bool innermost = !x.tail && i + 1 == x.components.size();
    if (innermost) {
      if (!is_isomorphic(p.graph(), q.graph())) return false;
      continue;
    }
    if (p.order() != q.order() || p.a().size() != q.a().size()) return false;
    const auto pc = p.side_colours();
    const auto qc = q.side_colours();
    if (canonical_form(p.graph(), pc) != canonical_form(q.graph(), qc)) return false;
  }
  return true;
}

std::vector<int> SequenceComponent::sequence() const {
  const auto b = b_part();
  const auto a = a_part();
  std::vector<int> out(b.begin(), b.end());
  out.insert(out.end(), a.begin(), a.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

SequenceDecomposition decompose_sequence(const DegreeSequence& d) {
  return decompose_sequence(d, eg_profile(d));
}

SequenceDecomposition decompose_sequence(const DegreeSequence& d, const EGProfile& prof) {
  if (!prof.graphic()) throw DomainError("degree sequence is not graphic");
  SequenceDecomposition out;
  out.eg = prof.eg;
  out.t = prof.t();
  const int t = out.t;
  const auto& terms = d.terms();

  std::size_t count = prof.eg.empty() ? 0 : prof.eg.size() - 1;
  for (int k : prof.eg) count += static_cast<std::size_t>(std::max(0, prof.conj(k) - std::max(prof.conj(k + 1), t)));
  out.components.reserve(count);
  // Entry 0 of the buffer is the shared degree of every K1 component.
  auto buffer = std::make_shared<std::vector<int>>();
  buffer->reserve(terms.size() + 1);
  buffer->push_back(0);
  const std::shared_ptr<const std::vector<int>> storage = buffer;

  for (std::size_t idx = 0; idx < prof.eg.size(); ++idx) {
    const int k = prof.eg[idx];
    const int eq_end = prof.conj(k);
    for (int p = std::max(prof.conj(k + 1), t); p < eq_end; ++p) {
      out.components.push_back({storage, 0, 0, 0, 1, std::nullopt});
    }
    if (idx + 1 == prof.eg.size()) break;
    const int k2 = prof.eg[idx + 1];
    if (k2 == k + 1) {
      // A one-vertex clique slot has no independent part: the component is K1.
      out.components.push_back({storage, 0, 1, 0, 0, std::pair{k, k2}});
      continue;
    }
    SequenceComponent c{storage, buffer->size(), static_cast<std::size_t>(k2 - k), 0, 0, std::pair{k, k2}};
    const int offset = prof.conj(k2) - (k2 - k);
    for (int p = k; p < k2; ++p) buffer->push_back(terms[static_cast<std::size_t>(p)] - offset);
    c.a_begin = buffer->size();
    for (int p = prof.conj(k2); p < prof.conj(k + 1); ++p) buffer->push_back(terms[static_cast<std::size_t>(p)] - k);
    c.a_size = buffer->size() - c.a_begin;
    out.components.push_back(std::move(c));
  }
  const int tail_end = prof.conj(t + 1);
  if (tail_end > t) {
    std::vector<int> tail;
    tail.reserve(static_cast<std::size_t>(tail_end - t));
    for (int p = t; p < tail_end; ++p) tail.push_back(terms[static_cast<std::size_t>(p)] - t);
    out.tail = std::move(tail);
  }
  return out;
}

}  // namespace unigraph
