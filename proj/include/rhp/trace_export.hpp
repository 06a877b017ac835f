#pragma once

// DOT snapshots and a JSON manifest for a bijection trace. Snapshot files are
// step_000.dot (the initial tuple), then step_NNN.dot after step NNN.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "rhp/involution.hpp"

namespace rhp {

std::string to_dot(const ForestTuple& tuple, const std::string& title = "tuple");

std::string snapshot_file_name(std::size_t index);

nlohmann::ordered_json trace_manifest(const TraceLog& trace);

// Writes every snapshot plus trace.json into dir (created if missing).
void write_trace(const TraceLog& trace, const std::filesystem::path& dir);

}  // namespace rhp
