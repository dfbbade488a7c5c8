#include "unigraph/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <thread>

#include "unigraph/catalog.hpp"
#include "unigraph/classes.hpp"
#include "unigraph/decomposition.hpp"
#include "unigraph/errors.hpp"
#include "unigraph/graph6.hpp"
#include "unigraph/oracle.hpp"

namespace unigraph {
namespace {

constexpr std::size_t kTags = 8;

struct Outcome {
  std::optional<std::string> failure;
  unsigned tags = 0;
};

struct Tally {
  std::map<int, std::array<std::size_t, kTags>> counts;  // per n
  std::array<std::optional<std::string>, kTags> first;    // graph6 of the first tagged graph
};

struct Property {
  PropertyInfo info;
  std::function<Outcome(const Graph&)> check;
  std::function<void(const Tally&, int, int, VerificationResult&)> finish;
};

DegreeSequence seq(const Graph& g) {
  const auto deg = g.degrees();
  return DegreeSequence(deg);
}

std::optional<std::string> fail_if(bool bad, std::string msg) {
  if (bad) return msg;
  return std::nullopt;
}

Outcome hered_three_routes(const Graph& g) {
  const bool forbidden = hereditary_unigraph(g, HuRoute::forbidden).member;
  const bool structural = hereditary_unigraph(g, HuRoute::structural).member;
  const bool components = hereditary_unigraph(g, HuRoute::sequence_components).member;
  const bool direct = hereditary_unigraph(g, HuRoute::sequence_direct).member;
  const bool bad = forbidden != structural || forbidden != components || forbidden != direct;
  return {fail_if(bad, "forbidden=" + std::to_string(forbidden) + " structural=" + std::to_string(structural) +
                           " components=" + std::to_string(components) + " direct=" + std::to_string(direct))};
}

Outcome hered_oracle(const Graph& g) {
  const bool oracle = is_hereditary_unigraph_bruteforce(g);
  const bool routes = is_hereditary_unigraph(g);
  return {fail_if(oracle != routes, "oracle=" + std::to_string(oracle) + " routes=" + std::to_string(routes))};
}

Outcome forcibly_free(const Graph& g) {
  static const auto class_g = catalog::class_g_forbidden();
  static const auto six = catalog::forcibly_class_g_forbidden();
  const bool a = is_forcibly_free(seq(g), class_g);
  const bool b = forcibly_class_G_by_components(g);
  const bool c = !find_forbidden(g, six);
  const bool bad = a != b || a != c;
  return {fail_if(bad, "(a)=" + std::to_string(a) + " (b)=" + std::to_string(b) + " (c)=" + std::to_string(c))};
}

Outcome split_criteria(const Graph& g) {
  std::string msg;
  try {
    is_threshold(g);
    is_split(g);
    is_pseudo_split(g);
  } catch (const RouteDisagreement& e) {
    msg = e.what();
  }
  return {fail_if(!msg.empty(), msg)};
}

Outcome threshold_count(const Graph& g) {
  const bool forbidden = !threshold_obstruction(g);
  const bool sequence = threshold_by_sequence(seq(g));
  Outcome o{fail_if(forbidden != sequence, "threshold routes disagree"), 0};
  if (sequence) o.tags = 1;
  return o;
}

void finish_threshold_count(const Tally& t, int lo, int hi, VerificationResult& r) {
  for (int n = std::max(lo, 1); n <= hi; ++n) {
    const auto it = t.counts.find(n);
    const std::size_t got = it == t.counts.end() ? 0 : it->second[0];
    const std::size_t want = std::size_t{1} << (n - 1);
    r.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(got) + " threshold classes");
    if (got != want) {
      r.failures.push_back("n=" + std::to_string(n) + ": " + std::to_string(got) + " threshold classes, expected " +
                           std::to_string(want));
    }
  }
}

Outcome decompose_roundtrip(const Graph& g) {
  const CanonicalDecomposition cd = decompose(g);
  if (!(recompose(cd) == g)) return {"recompose differs from the source graph"};
  for (const auto& c : cd.components) {
    const Graph& h = c.part.graph();
    if (!is_indecomposable(h)) return {"component is decomposable: " + emit_graph6(h)};
    if (h.order() == 1) continue;
    // Each side sees a neighbour and a non-neighbour on the other side.
    for (Vertex a : c.part.a()) {
      int seen = 0;
      for (Vertex b : c.part.b()) seen += h.adjacent(a, b) ? 1 : 0;
      if (seen == 0 || seen == static_cast<int>(c.part.b().size())) return {"A-vertex without neighbour/non-neighbour"};
    }
    for (Vertex b : c.part.b()) {
      int seen = 0;
      for (Vertex a : c.part.a()) seen += h.adjacent(a, b) ? 1 : 0;
      if (seen == 0 || seen == static_cast<int>(c.part.a().size())) return {"B-vertex without neighbour/non-neighbour"};
    }
  }
  if (cd.tail && !is_indecomposable(cd.tail->graph)) return {"tail is decomposable"};
  if (cd.tail && split_by_sequence(seq(cd.tail->graph))) return {"tail is split"};
  // Relabeling must not change the decomposition up to isomorphism.
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(static_cast<std::uint32_t>(g.order() * 7919 + g.edge_count()));
  std::shuffle(perm.begin(), perm.end(), rng);
  const Graph h = permuted(g, perm);
  if (!equivalent(cd, decompose(h))) return {"decomposition changes under relabeling"};
  if (!is_isomorphic(recompose(decompose(h)), g)) return {"recomposed relabeled graph not isomorphic"};
  return {};
}

Outcome decompose_sequence_matches(const Graph& g) {
  const CanonicalDecomposition cd = decompose(g);
  const SequenceDecomposition sd = decompose_sequence(seq(g));
  if (sd.components.size() != cd.components.size()) return {"component counts differ"};
  for (std::size_t i = 0; i < sd.components.size(); ++i) {
    const auto& part = cd.components[i].part;
    if (sd.components[i].sequence() != part.graph().degree_sequence()) {
      return {"component " + std::to_string(i) + " sequences differ"};
    }
    if (sd.components[i].b_part().size() != part.b().size() && part.order() > 1) {
      return {"component " + std::to_string(i) + " clique sizes differ"};
    }
  }
  if (sd.tail.has_value() != cd.tail.has_value()) return {"tail presence differs"};
  if (sd.tail && *sd.tail != cd.tail->graph.degree_sequence()) return {"tail sequences differ"};
  return {};
}

Outcome complement_commutes(const Graph& g) {
  const auto lhs = complement_decomposition(decompose(g));
  const auto rhs = decompose(complement(g));
  return {fail_if(!equivalent(lhs, rhs), "complement decomposition mismatch")};
}

Outcome eg_lemma(const Graph& g) {
  const int n = g.order();
  const auto deg = g.degrees();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t q = 0; q < total; ++q) {
    const int k = std::popcount(q);
    std::int64_t lhs = 0;
    std::int64_t rhs = static_cast<std::int64_t>(k) * (k - 1);
    std::vector<Vertex> in_q;
    std::vector<Vertex> in_p;
    std::vector<Vertex> in_t;
    for (Vertex v = 0; v < n; ++v) {
      const int dv = deg[static_cast<std::size_t>(v)];
      if (q >> v & 1U) {
        lhs += dv;
        in_q.push_back(v);
      } else {
        rhs += std::min(k, dv);
        (dv < k ? in_p : in_t).push_back(v);
      }
    }
    bool structure = is_clique(g, VertexSet(in_q)) && is_independent(g, VertexSet(in_p));
    for (Vertex t : in_t) {
      for (Vertex p : in_p) structure = structure && !g.adjacent(t, p);
      for (Vertex x : in_q) structure = structure && g.adjacent(t, x);
    }
    if ((lhs == rhs) != structure) {
      std::string set;
      for (Vertex v : in_q) set += (set.empty() ? "" : ",") + std::to_string(v);
      return {"Q={" + set + "}: equality=" + std::to_string(lhs == rhs) + " composition=" + std::to_string(structure)};
    }
  }
  return {};
}

Outcome eg_k_le_m(const Graph& g) {
  const DegreeSequence d = seq(g);
  const EGProfile p = eg_profile(d);
  if (!p.graphic()) return {"degree sequence of a graph reported non-graphic"};
  if (p.m != m_of(d)) return {"m mismatch"};
  for (int k : p.eg) {
    if (k > p.m) return {"EG term " + std::to_string(k) + " exceeds m=" + std::to_string(p.m)};
  }
  for (int k = 0; k <= d.size(); ++k) {
    if (eg_tail_sum_direct(d, k) != eg_tail_sum_via_conjugate(d, p, k)) {
      return {"conjugate identity fails at k=" + std::to_string(k)};
    }
    if (delta(d, k) != delta(p, k)) return {"delta mismatch at j=" + std::to_string(k)};
  }
  if (g.order() <= kMaxRealizationVertices && count_realizations(d) == 0) return {"no realization found"};
  return {};
}

Outcome tower(const Graph& g) {
  ClassReport r;
  try {
    r = classify(g);
  } catch (const RouteDisagreement& e) {
    return {std::string(e.what())};
  }
  Outcome o;
  if (!r.unigraph_desk_scale) return {"oracle unavailable"};
  const bool uni = *r.unigraph_desk_scale;
  if (r.matroidal.member && !r.threshold.member) o.tags |= 1U;
  if (r.matrogenic.member && !r.matroidal.member) o.tags |= 2U;
  if (r.hereditary_unigraph.member && !r.matrogenic.member) o.tags |= 4U;
  if (uni && !r.hereditary_unigraph.member) o.tags |= 8U;
  return o;
}

void finish_tower(const Tally& t, int, int, VerificationResult& r) {
  static const char* names[] = {"threshold < matroidal", "matroidal < matrogenic",
                                "matrogenic < hereditary unigraph", "hereditary unigraph < unigraph"};
  for (std::size_t i = 0; i < 4; ++i) {
    if (t.first[i]) {
      r.notes.push_back(std::string(names[i]) + " strict, witness " + *t.first[i]);
    } else {
      r.failures.push_back(std::string("no strictness witness for ") + names[i]);
    }
  }
}

Outcome hereditary_closure(const Graph& g) {
  if (!is_hereditary_unigraph(seq(g))) return {};
  const std::uint64_t total = std::uint64_t{1} << g.order();
  for (std::uint64_t mask = 0; mask + 1 < total; ++mask) {
    const Graph h = induced(g, VertexSet::from_mask(mask));
    if (!hereditary_unigraph(h, HuRoute::forbidden).member || !is_hereditary_unigraph(seq(h))) {
      return {"induced subgraph on mask " + std::to_string(mask) + " is not a hereditary unigraph"};
    }
  }
  return {};
}

Outcome component_reduction(const Graph& g) {
  const bool whole = hereditary_unigraph(g, HuRoute::forbidden).member;
  const CanonicalDecomposition cd = decompose(g);
  bool parts = true;
  for (const auto& c : cd.components) parts = parts && hereditary_unigraph(c.part.graph(), HuRoute::forbidden).member;
  if (cd.tail) parts = parts && hereditary_unigraph(cd.tail->graph, HuRoute::forbidden).member;
  return {fail_if(whole != parts, "graph=" + std::to_string(whole) + " components=" + std::to_string(parts))};
}

Outcome complement_closure(const Graph& g) {
  const bool a = hereditary_unigraph(g, HuRoute::forbidden).member;
  const bool b = hereditary_unigraph(complement(g), HuRoute::forbidden).member;
  const bool c = is_hereditary_unigraph(seq(complement(g)));
  return {fail_if(a != b || b != c, "graph=" + std::to_string(a) + " complement=" + std::to_string(b))};
}

Outcome spider_degree(const Graph& g) {
  const int p = g.order();
  if (p < 2 || split_obstruction(g) || !is_indecomposable(g)) return {};
  const DegreeSequence d = seq(g);
  const int m = m_of(d);
  const auto& x = d.terms();
  const bool top_clause = std::all_of(x.begin(), x.begin() + m, [&](int v) { return v == x[0]; }) &&
                          (x[0] == m || x[0] == p - 2);
  const bool bottom_clause = m < p &&
                             std::all_of(x.begin() + m, x.end(), [&](int v) { return v == x[static_cast<std::size_t>(m)]; }) &&
                             (x[static_cast<std::size_t>(m)] == 1 || x[static_cast<std::size_t>(m)] == m - 1);
  const bool top = recognize_top_expanded(g).has_value();
  const bool bottom = recognize_bottom_expanded(g).has_value();
  return {fail_if(top != top_clause || bottom != bottom_clause,
                  "top=" + std::to_string(top) + "/" + std::to_string(top_clause) + " bottom=" + std::to_string(bottom) +
                      "/" + std::to_string(bottom_clause))};
}

Outcome class_g_structure(const Graph& g) {
  std::string msg;
  try {
    is_chair_free_pseudo_split(g);
    is_kite_free_pseudo_split(g);
    is_class_G(g);
    is_forcibly_class_G(g);
  } catch (const RouteDisagreement& e) {
    msg = e.what();
  }
  return {fail_if(!msg.empty(), msg)};
}

Outcome matrogenic_routes(const Graph& g) {
  std::string msg;
  try {
    is_matrogenic(g);
    is_matroidal(g);
  } catch (const RouteDisagreement& e) {
    msg = e.what();
  }
  return {fail_if(!msg.empty(), msg)};
}

Outcome graph6_roundtrip(const Graph& g) {
  const std::string text = emit_graph6(g);
  if (!(parse_graph6(text) == g)) return {"round trip changed the graph"};
  if (!(parse_graph6(">>graph6<<" + text + "\n") == g)) return {"header form not accepted"};
  return {};
}

const std::vector<Property>& registry() {
  static const std::vector<Property> props = {
      {{"hered-uni-3routes", "hereditary unigraph: forbidden, structural, component-sequence and direct-sequence routes agree",
        kMaxEnumerationVertices},
       hered_three_routes, nullptr},
      {{"hered-uni-oracle", "hereditary unigraph routes agree with brute-force realization counts of every induced subgraph",
        kMaxHereditaryBruteforceVertices},
       hered_oracle, nullptr},
      {{"forcibly-free", "forcibly {2K2,C4,R,Rbar}-free degree sequence <=> components chair- or kite-free <=> 6-set free",
        kMaxRealizationVertices},
       forcibly_free, nullptr},
      {{"split-criteria", "threshold/split/pseudo-split: degree criteria, forbidden subgraphs and decomposition agree",
        kMaxEnumerationVertices},
       split_criteria, nullptr},
      {{"threshold-count", "threshold classes on n vertices number 2^(n-1)", kMaxEnumerationVertices},
       threshold_count, finish_threshold_count},
      {{"decompose-roundtrip", "recomposition, indecomposable components, relabeling invariance", kMaxEnumerationVertices},
       decompose_roundtrip, nullptr},
      {{"decompose-sequence", "sequence-level decomposition matches component degree sequences", kMaxEnumerationVertices},
       decompose_sequence_matches, nullptr},
      {{"complement-commutes", "decomposition of the complement is the complemented decomposition", kMaxEnumerationVertices},
       complement_commutes, nullptr},
      {{"eg-lemma-split", "EG equality for Q <=> (G[P+Q],P,Q) o G[T], every vertex subset Q", kMaxHereditaryBruteforceVertices},
       eg_lemma, nullptr},
      {{"eg-k-le-m", "EG terms are at most m(d); conjugate and delta identities; graphic <=> realizable",
        kMaxRealizationVertices},
       eg_k_le_m, nullptr},
      {{"tower", "threshold < matroidal < matrogenic < hereditary unigraph < unigraph, with strictness witnesses",
        kMaxRealizationVertices},
       tower, finish_tower},
      {{"hereditary-closure", "induced subgraphs of hereditary unigraphs are hereditary unigraphs",
        kMaxHereditaryBruteforceVertices},
       hereditary_closure, nullptr},
      {{"component-reduction", "hereditary unigraph <=> every canonical component is", kMaxEnumerationVertices},
       component_reduction, nullptr},
      {{"complement-closure", "hereditary unigraph <=> complement is", kMaxEnumerationVertices}, complement_closure,
       nullptr},
      {{"spider-degree", "top/bottom-expanded spider recognition matches the component degree clauses",
        kMaxEnumerationVertices},
       spider_degree, nullptr},
      {{"class-g-structure", "chair-free, kite-free, class G and forcibly class G: forbidden and structural routes agree",
        kMaxEnumerationVertices},
       class_g_structure, nullptr},
      {{"matrogenic-routes", "matrogenic and matroidal: structure and degree sequence agree", kMaxEnumerationVertices},
       matrogenic_routes, nullptr},
      {{"graph6-roundtrip", "graph6 emit/parse is lossless", kMaxEnumerationVertices}, graph6_roundtrip, nullptr},
  };
  return props;
}

}  // namespace

const std::vector<PropertyInfo>& properties() {
  static const std::vector<PropertyInfo> infos = [] {
    std::vector<PropertyInfo> out;
    for (const auto& p : registry()) out.push_back(p.info);
    return out;
  }();
  return infos;
}

VerificationResult verify(std::string_view property, int max_n, int jobs, int min_n) {
  const auto& props = registry();
  const auto it = std::find_if(props.begin(), props.end(), [&](const Property& p) { return p.info.id == property; });
  if (it == props.end()) throw UnknownProperty("unknown property '" + std::string(property) + "'");
  if (max_n > it->info.max_n) {
    throw CapExceeded(it->info.id + " is limited to n <= " + std::to_string(it->info.max_n));
  }
  if (min_n < 0 || max_n < min_n) throw std::invalid_argument("bad vertex range");
  if (jobs <= 0) jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));

  const auto start = std::chrono::steady_clock::now();
  VerificationResult result;
  result.property = it->info.id;
  result.min_n = min_n;
  result.max_n = max_n;
  Tally tally;
  for (int n = min_n; n <= max_n; ++n) {
    const auto& graphs = enumerate_graphs(n, jobs);
    std::vector<Outcome> outcomes(graphs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < graphs.size(); i = next++) {
        try {
          outcomes[i] = it->check(graphs[i]);
        } catch (const std::exception& e) {
          outcomes[i].failure = std::string("exception: ") + e.what();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < jobs; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    auto& counts = tally.counts[n];
    counts.fill(0);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Outcome& o = outcomes[i];
      for (std::size_t b = 0; b < kTags; ++b) {
        if (o.tags >> b & 1U) {
          ++counts[b];
          if (!tally.first[b]) tally.first[b] = emit_graph6(graphs[i]);
        }
      }
      if (o.failure) {
        const std::string g6 = emit_graph6(graphs[i]);
        result.counterexamples.push_back(g6);
        result.failures.push_back(g6 + ": " + *o.failure);
      }
    }
    result.classes_checked += graphs.size();
  }
  if (it->finish) it->finish(tally, min_n, max_n, result);
  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace unigraph
