#include "unigraph/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "unigraph/errors.hpp"
#include "unigraph/graph6.hpp"

namespace unigraph {
namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;
using Permutation = std::vector<Vertex>;

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, std::span<const int> colours) : n_(g.order()) {
    adj_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.row_mask(v);
    colours_.assign(static_cast<std::size_t>(n_), 0);
    if (!colours.empty()) std::copy(colours.begin(), colours.end(), colours_.begin());
    add_twin_generators();
  }

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    Partition start;
    std::vector<Vertex> by_key(static_cast<std::size_t>(n_));
    std::iota(by_key.begin(), by_key.end(), 0);
    auto key = [&](Vertex v) {
      return std::pair{colours_[static_cast<std::size_t>(v)],
                       std::popcount(adj_[static_cast<std::size_t>(v)])};
    };
    std::stable_sort(by_key.begin(), by_key.end(),
                     [&](Vertex a, Vertex b) { return key(a) < key(b); });
    for (Vertex v : by_key) {
      if (start.empty() || key(start.back().front()) != key(v)) start.emplace_back();
      start.back().push_back(v);
    }
    std::vector<Vertex> prefix;
    search(std::move(start), prefix);
    return best_order_;
  }

 private:
  std::uint64_t bit(Vertex v) const { return std::uint64_t{1} << v; }

  // True and false twin classes of equal colour are swapped by transpositions
  // that fix every other vertex, so they seed the automorphism generators.
  void add_twin_generators() {
    std::vector<char> placed(static_cast<std::size_t>(n_), 0);
    for (Vertex u = 0; u < n_; ++u) {
      if (placed[static_cast<std::size_t>(u)]) continue;
      Vertex prev = u;
      for (Vertex w = u + 1; w < n_; ++w) {
        if (placed[static_cast<std::size_t>(w)]) continue;
        if (colours_[static_cast<std::size_t>(u)] != colours_[static_cast<std::size_t>(w)]) continue;
        const std::uint64_t nu = adj_[static_cast<std::size_t>(u)] & ~bit(w);
        const std::uint64_t nw = adj_[static_cast<std::size_t>(w)] & ~bit(u);
        if (nu != nw) continue;
        placed[static_cast<std::size_t>(w)] = 1;
        Permutation swap(static_cast<std::size_t>(n_));
        std::iota(swap.begin(), swap.end(), 0);
        std::swap(swap[static_cast<std::size_t>(prev)], swap[static_cast<std::size_t>(w)]);
        generators_.push_back(std::move(swap));
        prev = w;
      }
    }
  }

  void refine(Partition& cells) const {
    for (;;) {
      std::vector<std::uint64_t> masks;
      masks.reserve(cells.size());
      for (const Cell& c : cells) {
        std::uint64_t m = 0;
        for (Vertex v : c) m |= bit(v);
        masks.push_back(m);
      }
      bool changed = false;
      Partition next;
      next.reserve(cells.size());
      for (const Cell& c : cells) {
        if (c.size() == 1) {
          next.push_back(c);
          continue;
        }
        std::vector<std::pair<std::vector<std::uint8_t>, Vertex>> sig;
        sig.reserve(c.size());
        for (Vertex v : c) {
          std::vector<std::uint8_t> counts(masks.size());
          for (std::size_t k = 0; k < masks.size(); ++k) {
            counts[k] = static_cast<std::uint8_t>(
                std::popcount(adj_[static_cast<std::size_t>(v)] & masks[k]));
          }
          sig.emplace_back(std::move(counts), v);
        }
        std::sort(sig.begin(), sig.end());
        std::size_t first = next.size();
        for (std::size_t i = 0; i < sig.size(); ++i) {
          if (i == 0 || sig[i].first != sig[i - 1].first) next.emplace_back();
          next.back().push_back(sig[i].second);
        }
        if (next.size() - first > 1) changed = true;
      }
      cells = std::move(next);
      if (!changed) return;
    }
  }

  // Orbit representative of every vertex under the generators fixing prefix.
  std::vector<Vertex> orbits(const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
      while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
      }
      return v;
    };
    for (const Permutation& p : generators_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](Vertex v) { return p[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        const Vertex a = find(v);
        const Vertex b = find(p[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(v);
    return parent;
  }

  void leaf(const Partition& cells) {
    std::vector<Vertex> order;
    order.reserve(cells.size());
    for (const Cell& c : cells) order.push_back(c.front());
    std::vector<Vertex> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<std::uint64_t> cert(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      std::uint64_t row = adj_[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
      std::uint64_t mapped = 0;
      while (row != 0) {
        const Vertex w = std::countr_zero(row);
        row &= row - 1;
        mapped |= bit(pos[static_cast<std::size_t>(w)]);
      }
      cert[static_cast<std::size_t>(i)] = mapped;
    }
    if (best_order_.empty() || cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_order_ = std::move(order);
    } else if (cert == best_cert_) {
      Permutation autom(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) {
        autom[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] =
            best_order_[static_cast<std::size_t>(i)];
      }
      generators_.push_back(std::move(autom));
    }
  }

  void search(Partition cells, std::vector<Vertex>& prefix) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    const Cell members = cells[t];
    std::vector<Vertex> explored;
    for (Vertex v : members) {
      const auto orbit = orbits(prefix);
      const bool redundant = std::any_of(explored.begin(), explored.end(), [&](Vertex e) {
        return orbit[static_cast<std::size_t>(e)] == orbit[static_cast<std::size_t>(v)];
      });
      if (redundant) continue;
      explored.push_back(v);
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != t) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        Cell rest;
        for (Vertex w : members) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> colours_;
  std::vector<Permutation> generators_;
  std::vector<std::uint64_t> best_cert_;
  std::vector<Vertex> best_order_;
};

// Pattern vertices ordered so each new vertex is as constrained as possible
// by those already placed.
std::vector<Vertex> pattern_order(const Graph& p) {
  const int k = p.order();
  std::vector<Vertex> order;
  std::vector<char> used(static_cast<std::size_t>(k), 0);
  std::vector<int> links(static_cast<std::size_t>(k), 0);
  const auto deg = p.degrees();
  for (int step = 0; step < k; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < k; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (pick < 0) {
        pick = v;
        continue;
      }
      const auto vi = static_cast<std::size_t>(v);
      const auto pi = static_cast<std::size_t>(pick);
      if (links[vi] > links[pi] || (links[vi] == links[pi] && deg[vi] > deg[pi])) pick = v;
    }
    used[static_cast<std::size_t>(pick)] = 1;
    order.push_back(pick);
    for (Vertex w : p.neighbors(pick)) ++links[static_cast<std::size_t>(w)];
  }
  return order;
}

class InducedSearch {
 public:
  InducedSearch(const Graph& host, const Graph& pattern)
      : host_(host),
        pattern_(pattern),
        order_(pattern_order(pattern)),
        host_deg_(host.degrees()),
        pattern_deg_(pattern.degrees()),
        image_(static_cast<std::size_t>(pattern.order()), -1),
        used_(static_cast<std::size_t>(host.order()), 0) {}

  bool run() { return extend(0); }
  std::vector<Vertex> image() const { return image_; }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    const int pn = pattern_.order();
    const int hn = host_.order();
    const int pd = pattern_deg_[static_cast<std::size_t>(p)];
    for (Vertex h = 0; h < hn; ++h) {
      if (used_[static_cast<std::size_t>(h)]) continue;
      const int hd = host_deg_[static_cast<std::size_t>(h)];
      if (hd < pd || (hn - 1 - hd) < (pn - 1 - pd)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex q = order_[i];
        ok = pattern_.adjacent(p, q) == host_.adjacent(h, image_[static_cast<std::size_t>(q)]);
      }
      if (!ok) continue;
      image_[static_cast<std::size_t>(p)] = h;
      used_[static_cast<std::size_t>(h)] = 1;
      if (extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(h)] = 0;
      image_[static_cast<std::size_t>(p)] = -1;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<Vertex> order_;
  std::vector<int> host_deg_;
  std::vector<int> pattern_deg_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g, std::span<const int> colours) {
  if (g.order() > kMaxCanonicalVertices) {
    throw CapExceeded("canonical labeling supports at most 64 vertices");
  }
  if (!colours.empty() && static_cast<int>(colours.size()) != g.order()) {
    throw std::invalid_argument("colour list length differs from vertex count");
  }
  return CanonicalSearch(g, colours).run();
}

std::string canonical_form(const Graph& g, std::span<const int> colours) {
  const auto order = canonical_labeling(g, colours);
  std::string out = emit_graph6(permuted(g, order));
  if (!colours.empty()) {
    out.push_back('|');
    for (Vertex v : order) {
      out += std::to_string(colours[static_cast<std::size_t>(v)]);
      out.push_back(',');
    }
  }
  return out;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_form(g) == canonical_form(h);
}

std::optional<std::vector<Vertex>> find_induced(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order()) return std::nullopt;
  InducedSearch search(host, pattern);
  if (!search.run()) return std::nullopt;
  return search.image();
}

std::optional<Witness> find_forbidden(const Graph& host, std::span<const NamedPattern> patterns) {
  for (const NamedPattern& p : patterns) {
    if (auto image = find_induced(host, p.graph)) return Witness{p.name, std::move(*image)};
  }
  return std::nullopt;
}

}  // namespace unigraph
