#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unigraph/graph.hpp"

namespace unigraph {

inline constexpr int kMaxCanonicalVertices = 64;

/// Canonical vertex order: position i of the result holds the vertex that
/// receives label i. Colour-refinement plus individualisation search with
/// automorphism pruning. `colours`, when given, restricts to colour-preserving
/// relabelings and must have one entry per vertex.
std::vector<Vertex> canonical_labeling(const Graph& g, std::span<const int> colours = {});

/// graph6 of the canonically relabeled graph; for coloured input the colour
/// list in canonical order is appended after a '|'.
std::string canonical_form(const Graph& g, std::span<const int> colours = {});

bool is_isomorphic(const Graph& g, const Graph& h);

/// Injective map pattern -> host with pattern == host[image] as induced
/// subgraphs, or nullopt. Deterministic: the lexicographically first image in
/// the search order is returned.
std::optional<std::vector<Vertex>> find_induced(const Graph& host, const Graph& pattern);

struct NamedPattern {
  std::string name;
  Graph graph;
};

/// An induced copy of a forbidden pattern inside a host graph.
struct Witness {
  std::string pattern;
  std::vector<Vertex> embedding;  // embedding[i] = host vertex playing pattern vertex i
};

/// First pattern (in list order) that occurs induced in host.
std::optional<Witness> find_forbidden(const Graph& host, std::span<const NamedPattern> patterns);

}  // namespace unigraph
