#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "unigraph/classes.hpp"
#include "unigraph/decomposition.hpp"
#include "unigraph/degree_sequence.hpp"
#include "unigraph/spiders.hpp"
#include "unigraph/verify.hpp"

namespace unigraph {

using Json = nlohmann::ordered_json;

/// Everything that can be read off a degree sequence alone. All fields are
/// computed in O(n) from a single EG profile, except `unigraph`, which asks
/// the brute-force oracle and is only filled for short sequences.
struct SequenceAnalysis {
  DegreeSequence d;
  EGProfile profile;
  std::optional<SequenceDecomposition> decomposition;
  std::optional<bool> threshold;
  std::optional<bool> split;
  std::optional<bool> pseudo_split;
  std::optional<bool> matrogenic;
  std::optional<bool> matroidal;
  std::optional<HereditaryVerdict> hereditary_direct;
  std::optional<HereditaryVerdict> hereditary_components;
  std::optional<bool> unigraph;
  std::vector<std::string> warnings;
};

/// Throws RouteDisagreement if the two sequence routes for hereditary
/// unigraphs disagree.
SequenceAnalysis analyze_sequence(DegreeSequence d, bool with_oracle = true);

Json to_json(const Witness& w);
Json to_json(const EGProfile& p);
Json to_json(const SequenceDecomposition& sd);
Json to_json(const CanonicalDecomposition& cd);
Json to_json(const SpiderCertificate& s);
Json to_json(const HereditaryVerdict& v);
Json to_json(const ClassReport& r);
Json to_json(const SequenceAnalysis& a);
Json to_json(const VerificationResult& r);

}  // namespace unigraph
