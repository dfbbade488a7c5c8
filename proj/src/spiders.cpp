#include "unigraph/spiders.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace unigraph {

const char* to_string(SpiderKind kind) { return kind == SpiderKind::thin ? "thin" : "thick"; }

namespace {

std::vector<std::uint64_t> row_copy(const Graph& g, Vertex v) {
  const auto r = g.row(v);
  return {r.begin(), r.end()};
}

std::vector<VertexSet> twin_classes(const Graph& g, bool closed) {
  std::map<std::vector<std::uint64_t>, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto key = row_copy(g, v);
    if (closed) key[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
    groups[key].push_back(v);
  }
  std::vector<VertexSet> out;
  for (auto& [key, members] : groups) out.emplace_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const VertexSet& x, const VertexSet& y) { return x.front() < y.front(); });
  return out;
}

// Body = the p highest-degree vertices, which must be strictly separated from
// the feet by degree in both spider kinds.
std::optional<SpiderCertificate> headless_on(const Graph& g, std::span<const Vertex> vs) {
  const int n = static_cast<int>(vs.size());
  if (n < 4 || n % 2 != 0) return std::nullopt;
  const int p = n / 2;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && g.adjacent(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)])) {
        ++deg[static_cast<std::size_t>(i)];
      }
    }
  }
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
    return deg[static_cast<std::size_t>(x)] > deg[static_cast<std::size_t>(y)];
  });
  if (deg[static_cast<std::size_t>(idx[static_cast<std::size_t>(p - 1)])] ==
      deg[static_cast<std::size_t>(idx[static_cast<std::size_t>(p)])]) {
    return std::nullopt;
  }
  std::vector<Vertex> body;
  std::vector<Vertex> feet;
  for (int i = 0; i < n; ++i) {
    (i < p ? body : feet).push_back(vs[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
  }
  std::sort(body.begin(), body.end());
  std::sort(feet.begin(), feet.end());
  for (std::size_t i = 0; i < body.size(); ++i) {
    for (std::size_t j = i + 1; j < body.size(); ++j) {
      if (!g.adjacent(body[i], body[j])) return std::nullopt;
      if (g.adjacent(feet[i], feet[j])) return std::nullopt;
    }
  }
  // Each foot must see exactly one body vertex (thin) or miss exactly one
  // (thick), and those partners must be distinct.
  for (SpiderKind kind : {SpiderKind::thin, SpiderKind::thick}) {
    const bool thin = kind == SpiderKind::thin;
    std::vector<std::pair<Vertex, Vertex>> matching;
    std::vector<char> used(body.size(), 0);
    bool ok = true;
    for (Vertex a : feet) {
      int partner = -1;
      int count = 0;
      for (std::size_t j = 0; j < body.size(); ++j) {
        if (g.adjacent(a, body[j]) == thin) {
          partner = static_cast<int>(j);
          ++count;
        }
      }
      if (count != 1 || used[static_cast<std::size_t>(partner)]) {
        ok = false;
        break;
      }
      used[static_cast<std::size_t>(partner)] = 1;
      matching.emplace_back(a, body[static_cast<std::size_t>(partner)]);
    }
    if (ok) {
      SpiderCertificate cert;
      cert.kind = kind;
      cert.feet = VertexSet(std::move(feet));
      cert.body = VertexSet(std::move(body));
      cert.matching = std::move(matching);
      return cert;
    }
  }
  return std::nullopt;
}

struct Contraction {
  Graph quotient;
  std::vector<VertexSet> classes;  // quotient vertex i stands for classes[i]
};

Contraction contract_classes(const Graph& g, std::vector<VertexSet> classes) {
  std::sort(classes.begin(), classes.end(),
            [](const VertexSet& x, const VertexSet& y) { return x.front() < y.front(); });
  std::vector<Vertex> reps;
  for (const auto& c : classes) reps.push_back(c.front());
  return {induced_ordered(g, reps), std::move(classes)};
}

// Lifts a certificate on the quotient back to g, provided multi-vertex
// classes land only on the allowed sides.
std::optional<SpiderCertificate> lift(const Contraction& c, const SpiderCertificate& q,
                                      const std::vector<char>& clique_class, bool allow_body,
                                      bool allow_feet) {
  SpiderCertificate out;
  out.kind = q.kind;
  std::vector<Vertex> feet;
  std::vector<Vertex> body;
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const auto& cls = c.classes[i];
    const bool in_body = q.body.contains(static_cast<Vertex>(i));
    if (cls.size() > 1) {
      // A clique block can only replace a body vertex and an independent one a foot.
      if (in_body && (!allow_body || !clique_class[i])) return std::nullopt;
      if (!in_body && (!allow_feet || clique_class[i])) return std::nullopt;
      out.blocks.push_back(cls);
    }
    auto& side = in_body ? body : feet;
    side.insert(side.end(), cls.begin(), cls.end());
  }
  out.feet = VertexSet(std::move(feet));
  out.body = VertexSet(std::move(body));
  for (auto [a, b] : q.matching) {
    out.matching.emplace_back(c.classes[static_cast<std::size_t>(a)].front(),
                              c.classes[static_cast<std::size_t>(b)].front());
  }
  return out;
}

std::optional<SpiderCertificate> expanded(const Graph& g, bool allow_body, bool allow_feet) {
  std::vector<VertexSet> classes;
  std::vector<char> clique;
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  auto take = [&](const std::vector<VertexSet>& cls, bool is_clique) {
    for (const auto& c : cls) {
      if (c.size() < 2) continue;
      classes.push_back(c);
      clique.push_back(is_clique ? 1 : 0);
      for (Vertex v : c) covered[static_cast<std::size_t>(v)] = 1;
    }
  };
  if (allow_body) take(true_twin_classes(g), true);
  if (allow_feet) take(false_twin_classes(g), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!covered[static_cast<std::size_t>(v)]) {
      classes.push_back(VertexSet{v});
      clique.push_back(0);
    }
  }
  // Keep the clique flags aligned with the sorted class order.
  std::vector<std::size_t> perm(classes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t x, std::size_t y) { return classes[x].front() < classes[y].front(); });
  std::vector<VertexSet> sorted_classes;
  std::vector<char> sorted_clique;
  for (std::size_t i : perm) {
    sorted_classes.push_back(classes[i]);
    sorted_clique.push_back(clique[i]);
  }
  const Contraction c = contract_classes(g, std::move(sorted_classes));
  std::vector<Vertex> all(static_cast<std::size_t>(c.quotient.order()));
  std::iota(all.begin(), all.end(), 0);
  const auto q = headless_on(c.quotient, all);
  if (!q) return std::nullopt;
  return lift(c, *q, sorted_clique, allow_body, allow_feet);
}

}  // namespace

std::vector<VertexSet> true_twin_classes(const Graph& g) { return twin_classes(g, true); }
std::vector<VertexSet> false_twin_classes(const Graph& g) { return twin_classes(g, false); }

std::optional<SpiderCertificate> recognize_headless_spider(const Graph& g) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  return headless_on(g, all);
}

std::optional<SpiderCertificate> recognize_spider(const Graph& g) {
  const int n = g.order();
  if (n % 2 == 0) return recognize_headless_spider(g);
  if (n < 5) return std::nullopt;
  const int p = (n - 1) / 2;
  for (Vertex c = 0; c < n; ++c) {
    if (g.degree(c) != p) continue;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (v != c) rest.push_back(v);
    }
    auto cert = headless_on(g, rest);
    if (!cert) continue;
    const bool sees_body =
        std::all_of(cert->body.begin(), cert->body.end(), [&](Vertex b) { return g.adjacent(c, b); });
    if (!sees_body) continue;  // degree p forces it to miss every foot then
    cert->head = c;
    return cert;
  }
  return std::nullopt;
}

std::optional<SpiderCertificate> recognize_top_expanded(const Graph& g) {
  return expanded(g, true, false);
}

std::optional<SpiderCertificate> recognize_bottom_expanded(const Graph& g) {
  return expanded(g, false, true);
}

std::optional<SpiderCertificate> recognize_expanded(const Graph& g) {
  return expanded(g, true, true);
}

}  // namespace unigraph
