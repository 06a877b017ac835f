#pragma once

// JSON form of a ForestTuple:
//   {"n":5,"k":3,"graphs":[{"edges":[[1,5,"black"],[2,0,"red"]]}, ...]}
// Edges are written sorted by (src, dst).

#include <string>

#include <json.hpp>

#include "rhp/forest.hpp"

namespace rhp {

nlohmann::ordered_json tuple_to_json(const ForestTuple& tuple);
ForestTuple tuple_from_json(const nlohmann::json& j);

// Compact single-line encoding, suitable for JSON-lines streams.
std::string dump_tuple(const ForestTuple& tuple);
ForestTuple parse_tuple(const std::string& text);

ForestTuple read_tuple_file(const std::string& path);

// Short human-readable form, e.g. "[1>5 2>0 | 4>3* | ]" (red edges starred).
std::string brief(const ForestTuple& tuple);

}  // namespace rhp
