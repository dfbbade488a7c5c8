#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unigraph/decomposition.hpp"
#include "unigraph/degree_sequence.hpp"
#include "unigraph/graph.hpp"
#include "unigraph/isomorphism.hpp"
#include "unigraph/spiders.hpp"

namespace unigraph {

struct SplitPartition {
  VertexSet a;  // independent
  VertexSet b;  // clique
};

/// B is a clique, A independent, C empty or inducing C5 with C complete to B
/// and anticomplete to A.
struct PseudoSplitPartition {
  VertexSet a;
  VertexSet b;
  VertexSet c;
};

// Degree-sequence routes. Each throws DomainError for a non-graphic sequence.

/// EG(d) contains 0..m(d).
bool threshold_by_sequence(const DegreeSequence& d);
/// m(d) is in EG(d).
bool split_by_sequence(const DegreeSequence& d);
/// Split, or the q-test: q = max{i : d_i >= i+4} (0 if none), the q-th
/// equality with shifted right side, and d_{q+1..q+5} all equal to q+2.
bool pseudo_split_by_sequence(const DegreeSequence& d);

// Same tests reusing a profile already computed for d.
bool threshold_by_sequence(const DegreeSequence& d, const EGProfile& p);
bool split_by_sequence(const DegreeSequence& d, const EGProfile& p);
bool pseudo_split_by_sequence(const DegreeSequence& d, const EGProfile& p);

// Graph routes. The is_* functions run every route and throw
// RouteDisagreement if any two disagree.

std::optional<Witness> threshold_obstruction(const Graph& g);
std::optional<Witness> split_obstruction(const Graph& g);
std::optional<Witness> pseudo_split_obstruction(const Graph& g);

/// Partition read off the canonical decomposition; nullopt when not split.
std::optional<SplitPartition> split_partition(const Graph& g);
std::optional<PseudoSplitPartition> pseudo_split_partition(const Graph& g);

bool is_threshold(const Graph& g);
bool is_split(const Graph& g);
bool is_pseudo_split(const Graph& g);

/// {2K2, C4, chair}-free, checked by forbidden subgraphs and by the
/// decomposition (tail absent or C5, nontrivial split components
/// top-expanded spiders). The kite version uses bottom-expanded spiders.
bool is_chair_free_pseudo_split(const Graph& g);
bool is_kite_free_pseudo_split(const Graph& g);

/// {2K2, C4, R, Rbar}-free, checked also structurally: pseudo-split with every
/// nontrivial split component an expanded headless spider.
bool is_class_G(const Graph& g);

/// {2K2, C4, R, Rbar, S, Sbar}-free, checked also as: pseudo-split with every
/// canonical component chair-free or kite-free.
bool is_forcibly_class_G(const Graph& g);
/// Pseudo-split and every canonical component chair-free or kite-free.
bool forcibly_class_G_by_components(const Graph& g);

enum class HuRoute { forbidden, structural, sequence_components, sequence_direct };
const char* to_string(HuRoute route);

struct ComponentVerdict {
  std::size_t index = 0;  // position in the canonical decomposition, tail last
  bool pass = true;
  std::string shape;      // "K1", "top-expanded spider", "C5", "rK2(3)", ...
  std::shared_ptr<const SpiderCertificate> spider;  // structural route only
};

struct HereditaryVerdict {
  bool member = true;
  HuRoute route = HuRoute::forbidden;
  std::optional<Witness> witness;                    // forbidden route
  std::vector<ComponentVerdict> components;          // structural and component routes
  std::optional<std::pair<int, int>> failing_slot;   // direct route
  bool tail_failed = false;
  std::string reason;
};

HereditaryVerdict hereditary_unigraph(const Graph& g, HuRoute route);
/// Only the two sequence routes apply; throws std::invalid_argument otherwise.
HereditaryVerdict hereditary_unigraph(const DegreeSequence& d, HuRoute route);
HereditaryVerdict hereditary_unigraph(const DegreeSequence& d, HuRoute route, const EGProfile& p);
/// Per-component sequence route on an already computed decomposition.
HereditaryVerdict hereditary_unigraph(const SequenceDecomposition& sd);

bool is_hereditary_unigraph(const Graph& g);
bool is_hereditary_unigraph(const DegreeSequence& d);

/// Name of the non-split shape a degree sequence (after subtracting `shift`
/// from every term) takes among the five allowed tail forms, or nullopt.
/// Terms must be descending.
std::optional<std::string> hereditary_tail_form(std::span<const int> terms, int shift = 0);

// Matrogenic graphs: nontrivial split components are headless prime spiders
// and a non-split tail is C5, rK2 or its complement. Matroidal graphs are the
// C5-free matrogenic graphs.
bool matrogenic_structural(const Graph& g);
bool matrogenic_by_sequence(const DegreeSequence& d);
bool matroidal_by_sequence(const DegreeSequence& d);
bool matrogenic_by_sequence(const DegreeSequence& d, const EGProfile& p);
bool matroidal_by_sequence(const DegreeSequence& d, const EGProfile& p);
bool is_matrogenic(const Graph& g);
bool is_matroidal(const Graph& g);

struct ClassVerdict {
  bool member = false;
  std::optional<Witness> witness;  // a forbidden induced subgraph when not a member
};

struct ClassReport {
  ClassVerdict threshold;
  ClassVerdict split;
  ClassVerdict pseudo_split;
  ClassVerdict chair_free;
  ClassVerdict kite_free;
  ClassVerdict class_g;
  ClassVerdict forcibly_class_g;
  ClassVerdict matrogenic;
  ClassVerdict matroidal;
  ClassVerdict hereditary_unigraph;
  std::optional<bool> unigraph_desk_scale;  // oracle answer, only for small graphs
  std::optional<SplitPartition> split_partition;
  std::optional<PseudoSplitPartition> pseudo_split_partition;
  HereditaryVerdict hereditary_structure;
};

/// Every recognizer on g, with all routes cross-checked and the class
/// inclusions verified. Throws RouteDisagreement on any inconsistency.
ClassReport classify(const Graph& g);

/// Inclusions that must hold in every report, as (smaller, larger) names.
std::vector<std::pair<std::string, std::string>> tower_violations(const ClassReport& r);

}  // namespace unigraph
