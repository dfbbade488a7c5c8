#include "unigraph/report.hpp"

#include "unigraph/errors.hpp"
#include "unigraph/graph6.hpp"
#include "unigraph/oracle.hpp"

namespace unigraph {
namespace {

Json set_json(const VertexSet& s) { return Json(s.members()); }

Json slot_json(const std::optional<std::pair<int, int>>& slot) {
  if (!slot) return nullptr;
  return Json::array({slot->first, slot->second});
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return Json(*v);
}

Json verdict_json(const ClassVerdict& v) {
  Json j;
  j["member"] = v.member;
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return j;
}

}  // namespace

SequenceAnalysis analyze_sequence(DegreeSequence d, bool with_oracle) {
  SequenceAnalysis a;
  a.profile = eg_profile(d);
  a.d = std::move(d);
  if (!a.profile.graphic()) {
    a.warnings.push_back(a.profile.even_sum ? "an Erdos-Gallai inequality fails" : "degree sum is odd");
    return a;
  }
  a.decomposition = decompose_sequence(a.d, a.profile);
  a.threshold = threshold_by_sequence(a.d, a.profile);
  a.split = split_by_sequence(a.d, a.profile);
  a.pseudo_split = pseudo_split_by_sequence(a.d, a.profile);
  a.matrogenic = matrogenic_by_sequence(a.d, a.profile);
  a.matroidal = matroidal_by_sequence(a.d, a.profile);
  a.hereditary_direct = hereditary_unigraph(a.d, HuRoute::sequence_direct, a.profile);
  a.hereditary_components = hereditary_unigraph(*a.decomposition);
  if (a.hereditary_direct->member != a.hereditary_components->member) {
    throw RouteDisagreement("hereditary unigraph: direct and per-component sequence routes disagree");
  }
  if (with_oracle) {
    if (a.d.size() <= kMaxRealizationVertices) {
      a.unigraph = count_realizations(a.d) == 1;
    } else {
      a.warnings.push_back("more than " + std::to_string(kMaxRealizationVertices) +
                           " terms: unigraph oracle skipped");
    }
  }
  return a;
}

Json to_json(const Witness& w) {
  Json j;
  j["pattern"] = w.pattern;
  j["embedding"] = w.embedding;
  return j;
}

Json to_json(const EGProfile& p) {
  Json j;
  j["eg"] = p.eg;
  j["m"] = p.m;
  j["t"] = p.t();
  j["evenSum"] = p.even_sum;
  j["graphic"] = p.graphic();
  j["conjugate"] = p.conjugate;
  j["slack"] = p.slack;
  return j;
}

Json to_json(const SequenceDecomposition& sd) {
  Json j;
  j["eg"] = sd.eg;
  j["t"] = sd.t;
  Json comps = Json::array();
  for (const auto& c : sd.components) {
    Json cj;
    cj["slot"] = slot_json(c.slot);
    cj["split"] = true;
    cj["trivial"] = c.trivial();
    cj["sequence"] = c.sequence();
    cj["cliquePart"] = std::vector<int>(c.b_part().begin(), c.b_part().end());
    cj["independentPart"] = std::vector<int>(c.a_part().begin(), c.a_part().end());
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  if (sd.tail) {
    Json tj;
    tj["split"] = false;
    tj["sequence"] = *sd.tail;
    j["tail"] = std::move(tj);
  } else {
    j["tail"] = nullptr;
  }
  return j;
}

Json to_json(const CanonicalDecomposition& cd) {
  Json j;
  Json comps = Json::array();
  for (const auto& c : cd.components) {
    Json cj;
    cj["graph6"] = emit_graph6(c.part.graph());
    cj["vertices"] = c.vertices;
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    for (Vertex v : c.part.a()) a.push_back(c.vertices[static_cast<std::size_t>(v)]);
    for (Vertex v : c.part.b()) b.push_back(c.vertices[static_cast<std::size_t>(v)]);
    cj["independentSet"] = a;
    cj["clique"] = b;
    cj["slot"] = slot_json(c.slot);
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  if (cd.tail) {
    Json tj;
    tj["graph6"] = emit_graph6(cd.tail->graph);
    tj["vertices"] = cd.tail->vertices;
    j["tail"] = std::move(tj);
  } else {
    j["tail"] = nullptr;
  }
  // A split innermost component has no canonical side assignment; ours comes
  // from the degree order.
  const bool innermost_split = !cd.tail && !cd.components.empty();
  j["innermostPartition"] = innermost_split ? Json("degree-order") : Json(nullptr);
  return j;
}

Json to_json(const SpiderCertificate& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  j["feet"] = set_json(s.feet);
  j["body"] = set_json(s.body);
  j["head"] = optional_json(s.head);
  Json m = Json::array();
  for (auto [a, b] : s.matching) m.push_back(Json::array({a, b}));
  j["matching"] = std::move(m);
  Json blocks = Json::array();
  for (const auto& blk : s.blocks) blocks.push_back(set_json(blk));
  j["blocks"] = std::move(blocks);
  return j;
}

Json to_json(const HereditaryVerdict& v) {
  Json j;
  j["member"] = v.member;
  j["route"] = to_string(v.route);
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (!v.components.empty()) {
    Json comps = Json::array();
    for (const auto& c : v.components) {
      Json cj;
      cj["index"] = c.index;
      cj["pass"] = c.pass;
      cj["shape"] = c.shape;
      if (c.spider) cj["spider"] = to_json(*c.spider);
      comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
  }
  if (v.failing_slot) j["failingSlot"] = slot_json(v.failing_slot);
  if (v.tail_failed) j["tailFailed"] = true;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

Json to_json(const ClassReport& r) {
  Json j;
  j["threshold"] = verdict_json(r.threshold);
  j["split"] = verdict_json(r.split);
  j["pseudoSplit"] = verdict_json(r.pseudo_split);
  j["chairFree2K2C4"] = verdict_json(r.chair_free);
  j["kiteFree2K2C4"] = verdict_json(r.kite_free);
  j["classG"] = verdict_json(r.class_g);
  j["forciblyClassG"] = verdict_json(r.forcibly_class_g);
  j["matrogenic"] = verdict_json(r.matrogenic);
  j["matroidal"] = verdict_json(r.matroidal);
  j["hereditaryUnigraph"] = verdict_json(r.hereditary_unigraph);
  j["unigraphDeskScale"] = optional_json(r.unigraph_desk_scale);
  if (r.split_partition) {
    j["splitPartition"] = {{"independentSet", set_json(r.split_partition->a)},
                           {"clique", set_json(r.split_partition->b)}};
  } else {
    j["splitPartition"] = nullptr;
  }
  if (r.pseudo_split_partition) {
    j["pseudoSplitPartition"] = {{"independentSet", set_json(r.pseudo_split_partition->a)},
                                 {"clique", set_json(r.pseudo_split_partition->b)},
                                 {"c5", set_json(r.pseudo_split_partition->c)}};
  } else {
    j["pseudoSplitPartition"] = nullptr;
  }
  j["hereditaryStructure"] = to_json(r.hereditary_structure);
  return j;
}

Json to_json(const SequenceAnalysis& a) {
  Json j;
  j["sequence"] = format_sequence(a.d.terms(), true);
  j["n"] = a.d.size();
  j["graphic"] = a.profile.graphic();
  j["egProfile"] = to_json(a.profile);
  j["decomposition"] = a.decomposition ? to_json(*a.decomposition) : Json(nullptr);
  Json classes;
  classes["threshold"] = optional_json(a.threshold);
  classes["split"] = optional_json(a.split);
  classes["pseudoSplit"] = optional_json(a.pseudo_split);
  classes["matrogenic"] = optional_json(a.matrogenic);
  classes["matroidal"] = optional_json(a.matroidal);
  classes["hereditaryUnigraph"] =
      a.hereditary_direct ? Json(a.hereditary_direct->member) : Json(nullptr);
  classes["unigraphDeskScale"] = optional_json(a.unigraph);
  j["classes"] = std::move(classes);
  if (a.hereditary_direct) {
    j["hereditaryDirect"] = to_json(*a.hereditary_direct);
    j["hereditaryComponents"] = to_json(*a.hereditary_components);
  }
  j["warnings"] = a.warnings;
  return j;
}

Json to_json(const VerificationResult& r) {
  Json j;
  j["property"] = r.property;
  j["minN"] = r.min_n;
  j["maxN"] = r.max_n;
  j["classesChecked"] = r.classes_checked;
  j["pass"] = r.pass();
  j["counterexamples"] = r.counterexamples;
  j["failures"] = r.failures;
  j["notes"] = r.notes;
  j["elapsedSeconds"] = r.elapsed_seconds;
  return j;
}

}  // namespace unigraph
