#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tiltlab/ar_oracle.hpp"
#include "tiltlab/ext_metric.hpp"
#include "tiltlab/quiver.hpp"
#include "tiltlab/structure_maps.hpp"
#include "tiltlab/tilting_poset.hpp"

namespace tiltlab {

using Json = nlohmann::ordered_json;

// {"name": ..., "n": ..., "arrows": [[s, t], ...]}
Json to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);
/// Text in either the line format or the JSON mirror (first non-blank '{').
Quiver read_quiver(std::string_view text);

// {"l": [[...]], "l_max": k}
Json to_json(const LMatrix& l);

// {"a": ..., "n": ..., "ext": [...], "hom": [...], "dims": [[...], ...]}
Json to_json(const DimTable& t, const DimVectorTable& dims);

// {"nodes": [[...]], "edges": [[u, v]], "component": [...], "truncated": [...]}
Json to_json(const HasseGraph& g);

// {"dim": ..., "nodes": [[0, 1, ...]], "edges": [[u, v]]}
Json to_json(const CubeSubquiver& k);
CubeSubquiver cube_from_json(const Json& j);

// {"dim": ..., "pieces": [{"coords": [...], "cube": {...}}], "glue": [...]}
Json to_json(const DecompositionSeq& d);

std::string quiver_to_dot(const Quiver& q);
/// Nodes labelled by shift vectors, one cluster per component, edges
/// between components dashed.
std::string hasse_to_dot(const HasseGraph& g);
std::string cube_to_dot(const CubeSubquiver& k);

struct DotSummary {
  bool directed = false;
  std::size_t nodes = 0;  // distinct node ids mentioned anywhere
  std::size_t edges = 0;  // edge operators
  std::size_t clusters = 0;
};

/// Recursive-descent check of the DOT language (graph, stmt_list, node,
/// edge, attr and subgraph statements, quoted and HTML-free ids). Throws
/// ParseError on malformed input.
DotSummary validate_dot(std::string_view text);

}  // namespace tiltlab
