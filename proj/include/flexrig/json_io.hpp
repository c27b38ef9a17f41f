#pragma once

#include <json.hpp>

#include <string>

#include "flexrig/motion.hpp"
#include "flexrig/movable.hpp"

namespace flexrig {

using Json = nlohmann::json;

// Graph format: {"vertices":[0,1,...], "edges":[[u,v],...]}; the vertices key
// is optional on input.
Json graph_to_json(const FlexGraph& g);
FlexGraph graph_from_json(const Json& j);

Json coloring_to_json(const NacColoring& c);

// Motion format: {"parameter":"t","display":...,"vertices":{"v":{"x":{"num":
// [[p,q],...],"den":[[p,q],...]},"y":{...}}}} with ascending coefficient
// lists of numerator/denominator integer pairs.
Json motion_to_json(const ParametricMotion& m);

Json cdc_to_json(const CdcTrace& trace);

Json verdict_to_json(const MovabilityVerdict& v);

/// Atomic text write: temp file in the target directory, then rename.
void write_text_atomic(const std::string& path, const std::string& content);

std::string read_text(const std::string& path);

} // namespace flexrig
