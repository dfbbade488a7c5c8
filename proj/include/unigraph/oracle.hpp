#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "unigraph/degree_sequence.hpp"
#include "unigraph/graph.hpp"
#include "unigraph/isomorphism.hpp"

namespace unigraph {

inline constexpr int kMaxEnumerationVertices = 8;
inline constexpr int kMaxRealizationVertices = 8;
inline constexpr int kMaxHereditaryBruteforceVertices = 7;

/// One representative per isomorphism class on n vertices, in canonical-form
/// order. Built by extending every class on n-1 vertices with every possible
/// neighbourhood of a new vertex; `jobs` worker threads share the extension
/// work. Results are cached per process and identical for any `jobs`.
/// Throws CapExceeded for n > kMaxEnumerationVertices.
const std::vector<Graph>& enumerate_graphs(int n, int jobs = 1);

/// Number of classes on n vertices for n = 0..8, computed independently of
/// enumerate_graphs by labelled enumeration (n <= 6 only, else CapExceeded).
std::size_t count_classes_labelled(int n);

/// Non-isomorphic realizations of d, sorted by canonical form, at most
/// `limit` of them when given. Empty when d is not graphic.
/// Throws CapExceeded if d has more than kMaxRealizationVertices terms.
std::vector<Graph> realizations(const DegreeSequence& d, std::optional<std::size_t> limit = {});
std::size_t count_realizations(const DegreeSequence& d);

bool is_unigraph_bruteforce(const Graph& g);
/// Every induced subgraph is a unigraph. Throws CapExceeded above
/// kMaxHereditaryBruteforceVertices.
bool is_hereditary_unigraph_bruteforce(const Graph& g);
/// No realization of d contains any of the patterns as an induced subgraph.
bool is_forcibly_free(const DegreeSequence& d, std::span<const NamedPattern> patterns);

}  // namespace unigraph
