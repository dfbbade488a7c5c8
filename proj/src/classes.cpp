#include "unigraph/classes.hpp"

#include <algorithm>
#include <stdexcept>

#include "unigraph/catalog.hpp"
#include "unigraph/errors.hpp"
#include "unigraph/oracle.hpp"

namespace unigraph {
namespace {

const std::vector<NamedPattern>& threshold_patterns() {
  static const auto p = catalog::threshold_forbidden();
  return p;
}
const std::vector<NamedPattern>& split_patterns() {
  static const auto p = catalog::split_forbidden();
  return p;
}
const std::vector<NamedPattern>& pseudo_split_patterns() {
  static const auto p = catalog::pseudo_split_forbidden();
  return p;
}
const std::vector<NamedPattern>& chair_patterns() {
  static const auto p = catalog::chair_free_forbidden();
  return p;
}
const std::vector<NamedPattern>& kite_patterns() {
  static const auto p = catalog::kite_free_forbidden();
  return p;
}
const std::vector<NamedPattern>& class_g_patterns() {
  static const auto p = catalog::class_g_forbidden();
  return p;
}
const std::vector<NamedPattern>& forcibly_patterns() {
  static const auto p = catalog::forcibly_class_g_forbidden();
  return p;
}
const std::vector<NamedPattern>& hereditary_patterns() {
  static const auto p = catalog::hereditary_unigraph_forbidden();
  return p;
}

std::string describe(const std::optional<Witness>& w) {
  if (!w) return "no forbidden subgraph";
  std::string s = "induced " + w->pattern + " on {";
  for (std::size_t i = 0; i < w->embedding.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w->embedding[i]);
  }
  return s + "}";
}

[[noreturn]] void disagree(const std::string& what, const std::string& detail) {
  throw RouteDisagreement(what + ": recognition routes disagree (" + detail + ")");
}

const char* yes_no(bool b) { return b ? "member" : "not a member"; }

void require_graphic(const EGProfile& p) {
  if (!p.graphic()) throw DomainError("degree sequence is not graphic");
}

bool is_c5(const Graph& h) {
  if (h.order() != 5) return false;
  for (Vertex v = 0; v < 5; ++v) {
    if (h.degree(v) != 2) return false;
  }
  return is_connected(h);
}

bool tail_is_absent_or_c5(const CanonicalDecomposition& cd) {
  return !cd.tail || is_c5(cd.tail->graph);
}

// C5, rK2 (r >= 2) or K_{1,r} + sK2 (r >= 2, s >= 1), checked by isomorphism.
std::optional<std::string> plain_tail_shape(const Graph& h, bool allow_star) {
  const int n = h.order();
  if (is_c5(h)) return "C5";
  if (n >= 4 && n % 2 == 0 && is_isomorphic(h, catalog::matching(n / 2))) {
    return "rK2(" + std::to_string(n / 2) + ")";
  }
  if (allow_star && n >= 5) {
    int r = 0;
    for (Vertex v = 0; v < n; ++v) r = std::max(r, h.degree(v));
    const int rest = n - 1 - r;
    if (r >= 2 && rest >= 2 && rest % 2 == 0 &&
        is_isomorphic(h, catalog::star_plus_matching(r, rest / 2))) {
      return "K1rSK2(" + std::to_string(r) + "," + std::to_string(rest / 2) + ")";
    }
  }
  return std::nullopt;
}

std::optional<std::string> tail_shape(const Graph& h, bool allow_star) {
  if (auto s = plain_tail_shape(h, allow_star)) return s;
  if (auto s = plain_tail_shape(complement(h), allow_star)) {
    if (*s == "C5") return s;
    return "co-" + *s;
  }
  return std::nullopt;
}

bool all_equal(std::span<const int> xs) {
  return std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) == xs.end();
}

// Split component of a hereditary unigraph, from its degree sequence given as
// the clique part followed by the independent part, each non-increasing.
const char* split_component_form(std::span<const int> b_part, std::span<const int> a_part) {
  const int nb = static_cast<int>(b_part.size());
  const int p = nb + static_cast<int>(a_part.size());
  if (p == 1) return "K1";
  if (!b_part.empty() && !a_part.empty() && b_part.back() < a_part.front()) {
    std::vector<int> merged(b_part.begin(), b_part.end());
    merged.insert(merged.end(), a_part.begin(), a_part.end());
    std::sort(merged.begin(), merged.end(), std::greater<>());
    return split_component_form(merged, {});
  }
  auto term = [&](int i) { return i < nb ? b_part[static_cast<std::size_t>(i)] : a_part[static_cast<std::size_t>(i - nb)]; };
  int m = 0;
  while (m < p && term(m) >= m) ++m;
  bool head_equal = true;
  for (int i = 1; i < m && head_equal; ++i) head_equal = term(i) == term(0);
  if (head_equal && (term(0) == m || term(0) == p - 2)) return "top-expanded spider";
  if (m < p) {
    bool foot_equal = true;
    for (int i = m + 1; i < p && foot_equal; ++i) foot_equal = term(i) == term(m);
    if (foot_equal && (term(m) == 1 || term(m) == m - 1)) return "bottom-expanded spider";
  }
  return nullptr;
}

std::optional<std::string> matrogenic_tail_form(std::span<const int> terms, int shift, bool allow_c5) {
  const int n = static_cast<int>(terms.size());
  if (!all_equal(terms) || n == 0) return std::nullopt;
  const int x = terms.front() - shift;
  if (allow_c5 && n == 5 && x == 2) return "C5";
  if (n >= 4 && n % 2 == 0 && x == 1) return "rK2(" + std::to_string(n / 2) + ")";
  if (n >= 4 && n % 2 == 0 && x == n - 2) return "co-rK2(" + std::to_string(n / 2) + ")";
  return std::nullopt;
}

struct DirectOptions {
  bool both_clauses = false;  // matrogenic: (i) and (ii)
  bool matrogenic_tail = false;
  bool allow_c5 = true;
};

HereditaryVerdict direct_check(const DegreeSequence& d, const EGProfile& prof, DirectOptions opt) {
  HereditaryVerdict v;
  v.route = HuRoute::sequence_direct;
  const auto& terms = d.terms();
  for (std::size_t idx = 0; idx + 1 < prof.eg.size(); ++idx) {
    const int k = prof.eg[idx];
    const int k2 = prof.eg[idx + 1];
    if (k2 < k + 2) continue;
    const std::span<const int> body(terms.data() + k, static_cast<std::size_t>(k2 - k));
    const int body_value = body.front();
    const bool clause_i =
        all_equal(body) &&
        (body_value == prof.conj(k2) || body_value == prof.conj(k) - delta(prof, k) - 2);
    const int a_begin = prof.conj(k2);
    const int a_end = prof.conj(k + 1);
    bool clause_ii = false;
    if (a_end > a_begin) {
      const std::span<const int> feet(terms.data() + a_begin, static_cast<std::size_t>(a_end - a_begin));
      clause_ii = all_equal(feet) && (feet.front() == k + 1 || feet.front() == k2 - 1);
    }
    const bool ok = opt.both_clauses ? (clause_i && clause_ii) : (clause_i || clause_ii);
    if (!ok) {
      v.member = false;
      v.failing_slot = std::pair{k, k2};
      v.reason = "slot (" + std::to_string(k) + "," + std::to_string(k2) + ") fails the clique/independent-set condition";
      return v;
    }
  }
  const int t = prof.t();
  const int tail_end = prof.conj(t + 1);
  if (tail_end > t) {
    const std::span<const int> tail(terms.data() + t, static_cast<std::size_t>(tail_end - t));
    const auto form = opt.matrogenic_tail ? matrogenic_tail_form(tail, t, opt.allow_c5)
                                          : hereditary_tail_form(tail, t);
    if (!form) {
      v.member = false;
      v.tail_failed = true;
      v.reason = "terms beyond t = " + std::to_string(t) + " form no allowed non-split sequence";
    }
  }
  return v;
}

HereditaryVerdict component_check(const SequenceDecomposition& sd) {
  HereditaryVerdict v;
  v.route = HuRoute::sequence_components;
  v.components.reserve(sd.components.size() + (sd.tail ? 1 : 0));
  for (std::size_t i = 0; i < sd.components.size(); ++i) {
    const SequenceComponent& c = sd.components[i];
    const char* form = split_component_form(c.b_part(), c.a_part());
    ComponentVerdict& cv = v.components.emplace_back();
    cv.index = i;
    cv.pass = form != nullptr;
    cv.shape = cv.pass ? form : "split, no spider degree pattern";
    if (!cv.pass && v.member) {
      v.member = false;
      v.failing_slot = c.slot;
      v.reason = "split component " + std::to_string(i) + " has no spider degree pattern";
    }
  }
  if (sd.tail) {
    ComponentVerdict cv;
    cv.index = sd.components.size();
    const auto form = hereditary_tail_form(*sd.tail, 0);
    cv.pass = form.has_value();
    cv.shape = form.value_or("non-split, not an allowed sequence");
    if (!cv.pass && v.member) {
      v.member = false;
      v.tail_failed = true;
      v.reason = "non-split component has no allowed degree sequence";
    }
    v.components.push_back(std::move(cv));
  }
  return v;
}

HereditaryVerdict structural_check(const CanonicalDecomposition& cd) {
  HereditaryVerdict v;
  v.route = HuRoute::structural;
  for (std::size_t i = 0; i < cd.components.size(); ++i) {
    ComponentVerdict cv;
    cv.index = i;
    const Graph& h = cd.components[i].part.graph();
    if (h.order() == 1) {
      cv.shape = "K1";
    } else if (auto top = recognize_top_expanded(h)) {
      cv.shape = "top-expanded spider";
      cv.spider = std::make_shared<const SpiderCertificate>(std::move(*top));
    } else if (auto bottom = recognize_bottom_expanded(h)) {
      cv.shape = "bottom-expanded spider";
      cv.spider = std::make_shared<const SpiderCertificate>(std::move(*bottom));
    } else {
      cv.pass = false;
      cv.shape = "split, not an expanded spider";
      if (v.member) {
        v.member = false;
        v.failing_slot = cd.components[i].slot;
        v.reason = "split component " + std::to_string(i) + " is not a top- or bottom-expanded spider";
      }
    }
    v.components.push_back(std::move(cv));
  }
  if (cd.tail) {
    ComponentVerdict cv;
    cv.index = cd.components.size();
    const auto shape = tail_shape(cd.tail->graph, true);
    cv.pass = shape.has_value();
    cv.shape = shape.value_or("non-split, not an allowed graph");
    if (!cv.pass && v.member) {
      v.member = false;
      v.tail_failed = true;
      v.reason = "non-split component is not C5, rK2, K1r+sK2 or a complement of these";
    }
    v.components.push_back(std::move(cv));
  }
  return v;
}

HereditaryVerdict forbidden_check(const Graph& g) {
  HereditaryVerdict v;
  v.route = HuRoute::forbidden;
  v.witness = find_forbidden(g, hereditary_patterns());
  v.member = !v.witness;
  if (v.witness) v.reason = describe(v.witness);
  return v;
}

bool components_spiders(const CanonicalDecomposition& cd,
                        std::optional<SpiderCertificate> (*recognize)(const Graph&)) {
  if (!tail_is_absent_or_c5(cd)) return false;
  return std::all_of(cd.components.begin(), cd.components.end(), [&](const DecompositionComponent& c) {
    return c.part.order() == 1 || recognize(c.part.graph()).has_value();
  });
}

bool matrogenic_structural(const CanonicalDecomposition& cd) {
  for (const auto& c : cd.components) {
    if (c.part.order() > 1 && !recognize_headless_spider(c.part.graph())) return false;
  }
  if (!cd.tail) return true;
  const auto shape = tail_shape(cd.tail->graph, false);
  return shape.has_value();
}

bool forcibly_by_components(const CanonicalDecomposition& cd) {
  if (!tail_is_absent_or_c5(cd)) return false;
  static const Graph chair = catalog::chair();
  static const Graph kite = catalog::kite();
  auto ok = [&](const Graph& h) { return !find_induced(h, chair) || !find_induced(h, kite); };
  for (const auto& c : cd.components) {
    if (!ok(c.part.graph())) return false;
  }
  return !cd.tail || ok(cd.tail->graph);
}

std::optional<SplitPartition> split_partition(const CanonicalDecomposition& cd) {
  if (cd.tail) return std::nullopt;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  for (const auto& c : cd.components) {
    for (Vertex v : c.part.a()) a.push_back(c.vertices[static_cast<std::size_t>(v)]);
    for (Vertex v : c.part.b()) b.push_back(c.vertices[static_cast<std::size_t>(v)]);
  }
  return SplitPartition{VertexSet(std::move(a)), VertexSet(std::move(b))};
}

std::optional<PseudoSplitPartition> pseudo_split_partition(const CanonicalDecomposition& cd) {
  if (!tail_is_absent_or_c5(cd)) return std::nullopt;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  for (const auto& c : cd.components) {
    for (Vertex v : c.part.a()) a.push_back(c.vertices[static_cast<std::size_t>(v)]);
    for (Vertex v : c.part.b()) b.push_back(c.vertices[static_cast<std::size_t>(v)]);
  }
  std::vector<Vertex> c;
  if (cd.tail) c = cd.tail->vertices;
  return PseudoSplitPartition{VertexSet(std::move(a)), VertexSet(std::move(b)), VertexSet(std::move(c))};
}

DegreeSequence sequence_of(const Graph& g) {
  const auto deg = g.degrees();
  return DegreeSequence(deg);
}

}  // namespace

const char* to_string(HuRoute route) {
  switch (route) {
    case HuRoute::forbidden: return "forbidden";
    case HuRoute::structural: return "structural";
    case HuRoute::sequence_components: return "sequence-components";
    case HuRoute::sequence_direct: return "sequence-direct";
  }
  return "?";
}

bool threshold_by_sequence(const DegreeSequence& d) { return threshold_by_sequence(d, eg_profile(d)); }
bool split_by_sequence(const DegreeSequence& d) { return split_by_sequence(d, eg_profile(d)); }
bool pseudo_split_by_sequence(const DegreeSequence& d) { return pseudo_split_by_sequence(d, eg_profile(d)); }

bool threshold_by_sequence(const DegreeSequence&, const EGProfile& p) {
  require_graphic(p);
  // EG(d) is ascending and bounded by m, so containing 0..m means size m+1.
  return static_cast<int>(p.eg.size()) == p.m + 1 && p.eg.back() == p.m;
}

bool split_by_sequence(const DegreeSequence&, const EGProfile& p) {
  require_graphic(p);
  return std::binary_search(p.eg.begin(), p.eg.end(), p.m);
}

bool pseudo_split_by_sequence(const DegreeSequence& d, const EGProfile& p) {
  require_graphic(p);
  if (std::binary_search(p.eg.begin(), p.eg.end(), p.m)) return true;
  const int n = d.size();
  int q = 0;
  for (int i = 1; i <= n; ++i) {
    if (d.d(i) >= i + 4) q = i;
  }
  if (n < q + 5) return false;
  for (int i = q + 1; i <= q + 5; ++i) {
    if (d.d(i) != q + 2) return false;
  }
  std::int64_t lhs = 0;
  for (int i = 1; i <= q; ++i) lhs += d.d(i);
  std::int64_t rhs = static_cast<std::int64_t>(q) * (q + 4);
  for (int i = q + 6; i <= n; ++i) rhs += d.d(i);
  return lhs == rhs;
}

std::optional<Witness> threshold_obstruction(const Graph& g) { return find_forbidden(g, threshold_patterns()); }
std::optional<Witness> split_obstruction(const Graph& g) { return find_forbidden(g, split_patterns()); }
std::optional<Witness> pseudo_split_obstruction(const Graph& g) {
  return find_forbidden(g, pseudo_split_patterns());
}

std::optional<SplitPartition> split_partition(const Graph& g) { return split_partition(decompose(g)); }
std::optional<PseudoSplitPartition> pseudo_split_partition(const Graph& g) {
  return pseudo_split_partition(decompose(g));
}

bool is_threshold(const Graph& g) {
  const auto w = threshold_obstruction(g);
  const bool seq = threshold_by_sequence(sequence_of(g));
  if (seq == w.has_value()) {
    disagree("threshold", std::string("sequence route: ") + yes_no(seq) + "; " + describe(w));
  }
  return seq;
}

bool is_split(const Graph& g) {
  const auto w = split_obstruction(g);
  const bool seq = split_by_sequence(sequence_of(g));
  const bool structural = split_partition(g).has_value();
  if (seq == w.has_value() || structural != seq) {
    disagree("split", std::string("sequence route: ") + yes_no(seq) + ", decomposition: " +
                          yes_no(structural) + "; " + describe(w));
  }
  return seq;
}

bool is_pseudo_split(const Graph& g) {
  const auto w = pseudo_split_obstruction(g);
  const bool seq = pseudo_split_by_sequence(sequence_of(g));
  const bool structural = pseudo_split_partition(g).has_value();
  if (seq == w.has_value() || structural != seq) {
    disagree("pseudo-split", std::string("sequence route: ") + yes_no(seq) + ", decomposition: " +
                                 yes_no(structural) + "; " + describe(w));
  }
  return seq;
}

bool is_chair_free_pseudo_split(const Graph& g) {
  const auto w = find_forbidden(g, chair_patterns());
  const bool structural = components_spiders(decompose(g), recognize_top_expanded);
  if (structural == w.has_value()) {
    disagree("{2K2,C4,chair}-free", std::string("structure: ") + yes_no(structural) + "; " + describe(w));
  }
  return structural;
}

bool is_kite_free_pseudo_split(const Graph& g) {
  const auto w = find_forbidden(g, kite_patterns());
  const bool structural = components_spiders(decompose(g), recognize_bottom_expanded);
  if (structural == w.has_value()) {
    disagree("{2K2,C4,kite}-free", std::string("structure: ") + yes_no(structural) + "; " + describe(w));
  }
  return structural;
}

bool is_class_G(const Graph& g) {
  const auto w = find_forbidden(g, class_g_patterns());
  const bool structural = components_spiders(decompose(g), recognize_expanded);
  if (structural == w.has_value()) {
    disagree("class G", std::string("structure: ") + yes_no(structural) + "; " + describe(w));
  }
  return structural;
}

bool forcibly_class_G_by_components(const Graph& g) { return forcibly_by_components(decompose(g)); }

bool is_forcibly_class_G(const Graph& g) {
  const auto w = find_forbidden(g, forcibly_patterns());
  const bool by_components = forcibly_class_G_by_components(g);
  if (by_components == w.has_value()) {
    disagree("forcibly class G", std::string("components: ") + yes_no(by_components) + "; " + describe(w));
  }
  return by_components;
}

std::optional<std::string> hereditary_tail_form(std::span<const int> terms, int shift) {
  const int n = static_cast<int>(terms.size());
  if (n == 0) return std::nullopt;
  std::vector<int> x(terms.begin(), terms.end());
  for (int& v : x) v -= shift;
  const std::span<const int> xs(x);
  if (n == 5 && all_equal(xs) && x[0] == 2) return "C5";
  if (n >= 4 && n % 2 == 0 && all_equal(xs) && x[0] == 1) return "rK2(" + std::to_string(n / 2) + ")";
  if (n >= 4 && n % 2 == 0 && all_equal(xs) && x[0] == n - 2) {
    return "co-rK2(" + std::to_string(n / 2) + ")";
  }
  const int rest = n - 1 - x[0];
  if (x[0] >= 2 && rest >= 2 && rest % 2 == 0 && all_equal(xs.subspan(1)) && x[1] == 1) {
    return "K1rSK2(" + std::to_string(x[0]) + "," + std::to_string(rest / 2) + ")";
  }
  // Complement of K_{1,r} + sK2: n-1 terms equal to n-2, then 2s.
  const int last = x.back();
  const int r = n - 1 - last;
  if (n >= 5 && last >= 2 && last % 2 == 0 && r >= 2 && all_equal(xs.first(static_cast<std::size_t>(n - 1))) &&
      x[0] == n - 2) {
    return "co-K1rSK2(" + std::to_string(r) + "," + std::to_string(last / 2) + ")";
  }
  return std::nullopt;
}

HereditaryVerdict hereditary_unigraph(const Graph& g, HuRoute route) {
  switch (route) {
    case HuRoute::forbidden: return forbidden_check(g);
    case HuRoute::structural: return structural_check(decompose(g));
    case HuRoute::sequence_components:
    case HuRoute::sequence_direct: return hereditary_unigraph(sequence_of(g), route);
  }
  throw std::invalid_argument("unknown route");
}

HereditaryVerdict hereditary_unigraph(const DegreeSequence& d, HuRoute route) {
  return hereditary_unigraph(d, route, eg_profile(d));
}

HereditaryVerdict hereditary_unigraph(const DegreeSequence& d, HuRoute route, const EGProfile& p) {
  if (route == HuRoute::sequence_components || route == HuRoute::sequence_direct) require_graphic(p);
  if (route == HuRoute::sequence_components) return component_check(decompose_sequence(d, p));
  if (route == HuRoute::sequence_direct) return direct_check(d, p, {});
  throw std::invalid_argument(std::string("route ") + to_string(route) + " needs a graph");
}

HereditaryVerdict hereditary_unigraph(const SequenceDecomposition& sd) { return component_check(sd); }

bool is_hereditary_unigraph(const DegreeSequence& d) {
  const auto direct = hereditary_unigraph(d, HuRoute::sequence_direct);
  const auto comps = hereditary_unigraph(d, HuRoute::sequence_components);
  if (direct.member != comps.member) {
    disagree("hereditary unigraph", "direct: " + std::string(yes_no(direct.member)) +
                                        ", components: " + yes_no(comps.member));
  }
  return direct.member;
}

bool is_hereditary_unigraph(const Graph& g) {
  const auto forbidden = hereditary_unigraph(g, HuRoute::forbidden);
  const auto structural = hereditary_unigraph(g, HuRoute::structural);
  const bool seq = is_hereditary_unigraph(sequence_of(g));
  if (forbidden.member != structural.member || forbidden.member != seq) {
    disagree("hereditary unigraph", std::string("forbidden: ") + yes_no(forbidden.member) + " (" +
                                        describe(forbidden.witness) + "), structural: " +
                                        yes_no(structural.member) + " (" + structural.reason +
                                        "), sequence: " + yes_no(seq));
  }
  return forbidden.member;
}

bool matrogenic_structural(const Graph& g) { return matrogenic_structural(decompose(g)); }

bool matrogenic_by_sequence(const DegreeSequence& d) { return matrogenic_by_sequence(d, eg_profile(d)); }
bool matroidal_by_sequence(const DegreeSequence& d) { return matroidal_by_sequence(d, eg_profile(d)); }

bool matrogenic_by_sequence(const DegreeSequence& d, const EGProfile& p) {
  require_graphic(p);
  return direct_check(d, p, {true, true, true}).member;
}

bool matroidal_by_sequence(const DegreeSequence& d, const EGProfile& p) {
  require_graphic(p);
  return direct_check(d, p, {true, true, false}).member;
}

bool is_matrogenic(const Graph& g) {
  const bool structural = matrogenic_structural(g);
  const bool seq = matrogenic_by_sequence(sequence_of(g));
  if (structural != seq) {
    disagree("matrogenic", std::string("structure: ") + yes_no(structural) + ", sequence: " + yes_no(seq));
  }
  return structural;
}

bool is_matroidal(const Graph& g) {
  static const Graph c5 = catalog::cycle(5);
  const bool structural = matrogenic_structural(g) && !find_induced(g, c5);
  const bool seq = matroidal_by_sequence(sequence_of(g));
  if (structural != seq) {
    disagree("matroidal", std::string("structure: ") + yes_no(structural) + ", sequence: " + yes_no(seq));
  }
  return structural;
}

std::vector<std::pair<std::string, std::string>> tower_violations(const ClassReport& r) {
  std::vector<std::pair<std::string, std::string>> out;
  auto check = [&](bool small, bool large, const char* s, const char* l) {
    if (small && !large) out.emplace_back(s, l);
  };
  check(r.threshold.member, r.matroidal.member, "threshold", "matroidal");
  check(r.matroidal.member, r.matrogenic.member, "matroidal", "matrogenic");
  check(r.matrogenic.member, r.hereditary_unigraph.member, "matrogenic", "hereditaryUnigraph");
  check(r.threshold.member, r.split.member, "threshold", "split");
  check(r.split.member, r.pseudo_split.member, "split", "pseudoSplit");
  check(r.threshold.member, r.chair_free.member, "threshold", "chairFree2K2C4");
  check(r.threshold.member, r.kite_free.member, "threshold", "kiteFree2K2C4");
  check(r.chair_free.member, r.forcibly_class_g.member, "chairFree2K2C4", "forciblyClassG");
  check(r.kite_free.member, r.forcibly_class_g.member, "kiteFree2K2C4", "forciblyClassG");
  check(r.forcibly_class_g.member, r.class_g.member, "forciblyClassG", "classG");
  check(r.class_g.member, r.pseudo_split.member, "classG", "pseudoSplit");
  check(r.forcibly_class_g.member, r.hereditary_unigraph.member, "forciblyClassG", "hereditaryUnigraph");
  if (r.unigraph_desk_scale) {
    check(r.hereditary_unigraph.member, *r.unigraph_desk_scale, "hereditaryUnigraph", "unigraphDeskScale");
  }
  return out;
}

ClassReport classify(const Graph& g) {
  ClassReport r;
  const DegreeSequence d = sequence_of(g);
  const CanonicalDecomposition cd = decompose(g);

  auto verdict = [](const std::vector<NamedPattern>& patterns, const Graph& h) {
    ClassVerdict v;
    v.witness = find_forbidden(h, patterns);
    v.member = !v.witness;
    return v;
  };
  auto require = [](bool a, bool b, const char* what, const ClassVerdict& v) {
    if (a != b) disagree(what, describe(v.witness));
  };

  r.threshold = verdict(threshold_patterns(), g);
  require(r.threshold.member, threshold_by_sequence(d), "threshold", r.threshold);

  r.split = verdict(split_patterns(), g);
  r.split_partition = split_partition(cd);
  require(r.split.member, split_by_sequence(d), "split", r.split);
  require(r.split.member, r.split_partition.has_value(), "split", r.split);

  r.pseudo_split = verdict(pseudo_split_patterns(), g);
  r.pseudo_split_partition = pseudo_split_partition(cd);
  require(r.pseudo_split.member, pseudo_split_by_sequence(d), "pseudo-split", r.pseudo_split);
  require(r.pseudo_split.member, r.pseudo_split_partition.has_value(), "pseudo-split", r.pseudo_split);

  r.chair_free = verdict(chair_patterns(), g);
  require(r.chair_free.member, components_spiders(cd, recognize_top_expanded), "{2K2,C4,chair}-free",
          r.chair_free);
  r.kite_free = verdict(kite_patterns(), g);
  require(r.kite_free.member, components_spiders(cd, recognize_bottom_expanded), "{2K2,C4,kite}-free",
          r.kite_free);

  r.class_g = verdict(class_g_patterns(), g);
  require(r.class_g.member, components_spiders(cd, recognize_expanded), "class G", r.class_g);

  r.forcibly_class_g = verdict(forcibly_patterns(), g);
  require(r.forcibly_class_g.member, forcibly_by_components(cd), "forcibly class G", r.forcibly_class_g);
  if (g.order() <= kMaxRealizationVertices) {
    require(r.forcibly_class_g.member, is_forcibly_free(d, class_g_patterns()), "forcibly class G",
            r.forcibly_class_g);
  }

  r.hereditary_unigraph = verdict(hereditary_patterns(), g);
  r.hereditary_structure = structural_check(cd);
  const auto by_components = component_check(decompose_sequence(d));
  const auto direct = direct_check(d, eg_profile(d), {});
  if (r.hereditary_structure.member != r.hereditary_unigraph.member ||
      by_components.member != r.hereditary_unigraph.member || direct.member != r.hereditary_unigraph.member) {
    disagree("hereditary unigraph", describe(r.hereditary_unigraph.witness) + "; structural: " +
                                        r.hereditary_structure.reason + "; components: " +
                                        by_components.reason + "; direct: " + direct.reason);
  }

  r.matrogenic.member = matrogenic_structural(cd);
  if (r.matrogenic.member != matrogenic_by_sequence(d)) disagree("matrogenic", "structure vs sequence");
  static const Graph c5 = catalog::cycle(5);
  const auto c5_copy = find_induced(g, c5);
  r.matroidal.member = r.matrogenic.member && !c5_copy;
  if (r.matroidal.member != matroidal_by_sequence(d)) disagree("matroidal", "structure vs sequence");
  // Only the hereditary-unigraph obstruction and an induced C5 are available as witnesses.
  if (!r.matrogenic.member) r.matrogenic.witness = r.hereditary_unigraph.witness;
  if (!r.matroidal.member) {
    r.matroidal.witness = r.matrogenic.member ? std::optional<Witness>(Witness{"C5", *c5_copy})
                                              : r.matrogenic.witness;
  }

  if (g.order() <= kMaxRealizationVertices) r.unigraph_desk_scale = count_realizations(d) == 1;

  const auto bad = tower_violations(r);
  if (!bad.empty()) {
    std::string msg;
    for (const auto& [s, l] : bad) msg += (msg.empty() ? "" : ", ") + s + " but not " + l;
    disagree("class inclusions", msg);
  }
  return r;
}

}  // namespace unigraph
