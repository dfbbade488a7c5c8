#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "unigraph/graph.hpp"

namespace unigraph {

/// thin: every foot sees only its partner; thick: every foot sees all of the
/// body except its partner. With two feet the conditions coincide and the
/// spider is reported as thin.
enum class SpiderKind { thin, thick };

const char* to_string(SpiderKind kind);

struct SpiderCertificate {
  SpiderKind kind = SpiderKind::thin;
  VertexSet feet;
  VertexSet body;
  std::optional<Vertex> head;
  std::vector<std::pair<Vertex, Vertex>> matching;  // (foot, body); representatives when expanded
  std::vector<VertexSet> blocks;                    // substituted blocks with two or more vertices

  bool expanded() const { return !blocks.empty(); }
};

/// Prime spider, headless or with a head. Does not look for expansions.
std::optional<SpiderCertificate> recognize_spider(const Graph& g);

/// Headless prime spider only.
std::optional<SpiderCertificate> recognize_headless_spider(const Graph& g);

/// Cliques substituted for body vertices of a headless prime spider (possibly
/// none). Feet and body of the certificate are the full expanded sets.
std::optional<SpiderCertificate> recognize_top_expanded(const Graph& g);

/// Edgeless graphs substituted for feet of a headless prime spider.
std::optional<SpiderCertificate> recognize_bottom_expanded(const Graph& g);

/// Both expansions at once: cliques for body vertices, edgeless graphs for
/// feet. This is the component shape of the class G.
std::optional<SpiderCertificate> recognize_expanded(const Graph& g);

/// Classes of vertices with equal closed neighbourhoods (true twins) or equal
/// open neighbourhoods (false twins), each sorted, ordered by smallest member.
std::vector<VertexSet> true_twin_classes(const Graph& g);
std::vector<VertexSet> false_twin_classes(const Graph& g);

}  // namespace unigraph
