// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "unigraph/catalog.hpp"
#include "unigraph/classes.hpp"
#include "unigraph/decomposition.hpp"
#include "unigraph/graph6.hpp"
#include "unigraph/isomorphism.hpp"
#include "unigraph/oracle.hpp"
#include "unigraph/report.hpp"
#include "unigraph/verify.hpp"

using namespace unigraph;
namespace cat = unigraph::catalog;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string summarize(const VerificationResult& r) {
  std::ostringstream o;
  o << r.property << " n<=" << r.max_n << ": " << r.classes_checked << " classes, "
    << r.counterexamples.size() << " counterexamples, " << r.failures.size() << " failures, "
    << r.elapsed_seconds << "s";
  for (std::size_t i = 0; i < std::min<std::size_t>(r.failures.size(), 3); ++i) o << "; " << r.failures[i];
  return o.str();
}

void run_verify(Outcome& out, const std::string& property, int max_n) {
  const VerificationResult r = verify(property, max_n);
  out.detail << " " << summarize(r) << ".";
  out.require(r.pass(), property);
}

Outcome criterion1() {
  Outcome out;
  const auto t0 = Clock::now();
  const auto u = realizations(DegreeSequence{4, 2, 2, 2, 2, 2});
  const bool u_ok = u.size() == 1 && is_isomorphic(u[0], cat::u_graph(1));
  const auto pans = realizations(DegreeSequence{3, 2, 2, 2, 1});
  bool pans_ok = pans.size() == 2;
  if (pans_ok) {
    const bool direct = is_isomorphic(pans[0], cat::four_pan()) && is_isomorphic(pans[1], cat::co_four_pan());
    const bool swapped = is_isomorphic(pans[1], cat::four_pan()) && is_isomorphic(pans[0], cat::co_four_pan());
    pans_ok = direct || swapped;
  }
  const double secs = seconds_since(t0);
  out.detail << " (4,2^5): " << u.size() << " realization(s); (3,2^3,1): " << pans.size()
             << " realization(s); " << secs << "s.";
  out.require(u_ok, "(4,2^5) has exactly one realization, isomorphic to U_1");
  out.require(pans_ok, "(3,2,2,2,1) realizations are the 4-pan and co-4-pan");
  out.require(secs < 1.0, "under 1 s");
  return out;
}

Outcome criterion2() {
  Outcome out;
  const auto t0 = Clock::now();
  const VerificationResult r = verify("hered-uni-3routes", 7);
  const double secs = seconds_since(t0);
  out.detail << " " << summarize(r) << ".";
  out.require(r.pass(), "zero counterexamples");
  out.require(enumerate_graphs(7).size() == 1044, "1044 classes at n = 7");
  out.require(r.classes_checked == 1253, "1253 classes for n <= 7");
  out.require(secs < 60.0, "under 60 s");
  return out;
}

Outcome criterion3() {
  Outcome out;
  run_verify(out, "forcibly-free", 7);
  return out;
}

Outcome criterion4() {
  Outcome out;
  run_verify(out, "split-criteria", 7);
  run_verify(out, "threshold-count", 7);
  return out;
}

Outcome criterion5() {
  Outcome out;
  const auto t0 = Clock::now();
  run_verify(out, "decompose-roundtrip", 8);
  run_verify(out, "decompose-sequence", 8);
  run_verify(out, "complement-commutes", 7);
  const double secs = seconds_since(t0);
  out.detail << " total " << secs << "s.";
  out.require(secs < 300.0, "under 5 min");
  return out;
}

Outcome criterion6() {
  Outcome out;
  run_verify(out, "eg-lemma-split", 7);
  return out;
}

// Degree sequence of S_1 o S_2 o ... o S_k o C5, where the S_i cycle through
// net(3), co-net(3), a top-expanded P4, a bottom-expanded P4 and single
// dominating and isolated vertices. Built arithmetically in O(n).
struct Piece {
  std::vector<int> a_internal;
  std::vector<int> b_internal;
};

std::vector<Piece> piece_kinds() {
  auto piece_of = [](const Graph& g, const VertexSet& a) {
    Piece p;
    for (int v = 0; v < g.order(); ++v) (a.contains(v) ? p.a_internal : p.b_internal).push_back(g.degree(v));
    return p;
  };
  return {
      piece_of(cat::spider_net(3), VertexSet{0, 1, 2}),
      piece_of(cat::co_net(3), VertexSet{3, 4, 5}),
      piece_of(substitute(cat::path(4), 2, cat::complete(3)), VertexSet{0, 5}),
      piece_of(substitute(cat::path(4), 0, cat::empty_graph(3)), VertexSet{0, 1, 2, 5}),
      Piece{{}, {0}},
      Piece{{0}, {}},
  };
}

std::vector<int> synthetic_sequence(int target_n) {
  const auto kinds = piece_kinds();
  std::vector<const Piece*> chosen;
  int n = 5;
  for (std::size_t i = 0; n < target_n; ++i) {
    const Piece& p = kinds[i % kinds.size()];
    const int size = static_cast<int>(p.a_internal.size() + p.b_internal.size());
    if (n + size > target_n) {
      chosen.push_back(&kinds[4]);
      n += 1;
    } else {
      chosen.push_back(&p);
      n += size;
    }
  }
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(n));
  long long clique_before = 0;
  long long after = n;
  for (const Piece* p : chosen) {
    const long long size = static_cast<long long>(p->a_internal.size() + p->b_internal.size());
    after -= size;
    for (int x : p->a_internal) d.push_back(static_cast<int>(x + clique_before));
    for (int x : p->b_internal) d.push_back(static_cast<int>(x + clique_before + after));
    clique_before += static_cast<long long>(p->b_internal.size());
  }
  for (int i = 0; i < 5; ++i) d.push_back(static_cast<int>(2 + clique_before));
  return d;
}

// The same composition built as a graph, for checking the generator.
Graph synthetic_graph(int target_n) {
  const std::vector<std::pair<Graph, VertexSet>> kinds{
      {cat::spider_net(3), VertexSet{0, 1, 2}},
      {cat::co_net(3), VertexSet{3, 4, 5}},
      {substitute(cat::path(4), 2, cat::complete(3)), VertexSet{0, 5}},
      {substitute(cat::path(4), 0, cat::empty_graph(3)), VertexSet{0, 1, 2, 5}},
  };
  std::vector<SplittedGraph> chosen;
  int n = 5;
  for (std::size_t i = 0; n < target_n; ++i) {
    const std::size_t k = i % 6;
    SplittedGraph s = k < 4 ? SplittedGraph(kinds[k].first, kinds[k].second,
                                            [&] {
                                              std::vector<Vertex> b;
                                              for (int v = 0; v < kinds[k].first.order(); ++v) {
                                                if (!kinds[k].second.contains(v)) b.push_back(v);
                                              }
                                              return VertexSet(b);
                                            }())
                            : (k == 4 ? SplittedGraph::dominating_vertex() : SplittedGraph::isolated_vertex());
    if (n + s.order() > target_n) s = SplittedGraph::dominating_vertex();
    n += s.order();
    chosen.push_back(std::move(s));
  }
  Graph g = cat::cycle(5);
  for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) g = compose(*it, g);
  return g;
}

Outcome criterion7() {
  Outcome out;
  // Generator check on small instances against explicit graphs.
  for (int n : {5, 12, 40, 97}) {
    std::vector<int> d = synthetic_sequence(n);
    std::sort(d.rbegin(), d.rend());
    const Graph g = synthetic_graph(n);
    std::vector<int> gd = g.degrees();
    std::sort(gd.rbegin(), gd.rend());
    out.require(d == gd, "synthetic sequence matches its graph at n=" + std::to_string(n));
    out.require(is_hereditary_unigraph(g), "synthetic graph is a hereditary unigraph at n=" + std::to_string(n));
  }

  const std::vector<int> sizes{10'000, 100'000, 1'000'000};
  std::vector<double> times;
  for (int n : sizes) {
    const DegreeSequence d(synthetic_sequence(n));
    double best = 1e9;
    bool member = false;
    for (int rep = 0; rep < 5; ++rep) {
      const auto t0 = Clock::now();
      const SequenceAnalysis a = analyze_sequence(d, false);
      best = std::min(best, seconds_since(t0));
      member = a.hereditary_direct && a.hereditary_direct->member && a.hereditary_components->member;
    }
    out.require(member, "synthetic sequence recognized at n=" + std::to_string(n));
    times.push_back(best);
    out.detail << " n=" << n << ": " << best * 1000.0 << "ms;";
  }
  const double r1 = times[1] / times[0];
  const double r2 = times[2] / times[1];
  out.detail << " decade ratios " << r1 << ", " << r2 << ".";
  // Linear growth means a 10x ratio per decade; allow 1.5x slack on top.
  out.require(r1 <= 15.0 && r2 <= 15.0, "each decade within 1.5x of linear (ratio <= 15)");
  out.require(times[2] < 0.1, "under 100 ms at n = 10^6");
  return out;
}

Outcome criterion8() {
  Outcome out;
  const VerificationResult r = verify("tower", 7);
  out.detail << " " << summarize(r) << ".";
  for (const auto& note : r.notes) out.detail << " " << note << ";";
  out.require(r.pass(), "zero counterexamples with strictness witnesses");
  out.require(r.notes.size() >= 4, "a strictness witness for every inclusion");
  return out;
}

Outcome criterion9() {
  Outcome out;
  run_verify(out, "graph6-roundtrip", 6);
  out.require(enumerate_graphs(6).size() == 156, "156 classes at n = 6");
  std::mt19937_64 rng(20240917);
  int bad = 0;
  for (int trial = 0; trial < 10'000; ++trial) {
    const int n = static_cast<int>(rng() % 13);
    std::bernoulli_distribution coin(static_cast<double>(rng() % 101) / 100.0);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    if (!(parse_graph6(emit_graph6(g)) == g)) ++bad;
  }
  out.detail << " random n<=12: 10000 graphs, " << bad << " mismatches.";
  out.require(bad == 0, "random round trips");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"realization counts", criterion1},
      {"three-route equivalence for hereditary unigraphs", criterion2},
      {"forcibly-free equivalence", criterion3},
      {"threshold/split/pseudo-split degree criteria", criterion4},
      {"decomposition soundness", criterion5},
      {"EG-equality lemma", criterion6},
      {"linear-time sequence recognition", criterion7},
      {"tower inclusions", criterion8},
      {"graph6 round trip", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %zu %s:%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
