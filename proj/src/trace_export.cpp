#include "rhp/trace_export.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rhp/errors.hpp"
#include "rhp/tuple_io.hpp"

namespace rhp {

namespace {

const char* color_name(Color c) { return c == Color::Red ? "red" : "black"; }

nlohmann::ordered_json edge_json(const ColoredEdge& e) {
  return nlohmann::ordered_json::array({e.src, e.dst, color_name(e.color)});
}

nlohmann::ordered_json cycle_json(const CycleRecord& c) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& ge : c.edges) {
    edges.push_back({{"graph", ge.graph_index}, {"edge", edge_json(ge.edge)}});
  }
  return {{"kind", c.kind == CycleKind::OrdinaryCycle ? "ordinary" : "forbidden"},
          {"max_node", c.max_node},
          {"edges", edges}};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace

std::string to_dot(const ForestTuple& tuple, const std::string& title) {
  std::ostringstream os;
  os << "digraph \"" << title << "\" {\n";
  for (std::size_t g = 0; g < tuple.graphs.size(); ++g) {
    os << "  subgraph cluster_" << g << " {\n";
    os << "    label=\"graph " << g << "\";\n";
    for (NodeId v = 0; v <= tuple.n; ++v) {
      os << "    g" << g << "_" << v << " [label=\"" << v << "\""
         << (tuple.is_special(v) ? ", shape=doublecircle" : "") << "];\n";
    }
    for (const auto& e : tuple.graphs[g].edges()) {
      os << "    g" << g << "_" << e.src << " -> g" << g << "_" << e.dst;
      if (e.color == Color::Red) os << " [color=red style=dashed]";
      os << ";\n";
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string snapshot_file_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "step_%03zu.dot", index);
  return buf;
}

nlohmann::ordered_json trace_manifest(const TraceLog& trace) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    nlohmann::ordered_json moves = nlohmann::ordered_json::array();
    for (const auto& m : s.edge_moves) {
      moves.push_back({{"edge", edge_json(m.edge)}, {"from", m.from_graph}, {"to", m.to_graph}});
    }
    nlohmann::ordered_json changes = nlohmann::ordered_json::array();
    for (const auto& c : s.color_changes) changes.push_back(cycle_json(c));
    nlohmann::ordered_json walk = nlohmann::ordered_json::array();
    for (const auto& w : s.walk) {
      walk.push_back({{"edge", edge_json(w.edge)}, {"direction", w.forward ? "forward" : "backward"}});
    }
    steps.push_back({{"index", i + 1},
                     {"involution", s.involution},
                     {"sub_step", s.sub_step},
                     {"edge_moves", moves},
                     {"color_changes", changes},
                     {"walk", walk},
                     {"snapshot", tuple_to_json(s.snapshot)},
                     {"dot", snapshot_file_name(i + 1)}});
  }
  const ForestTuple& last = trace.steps.empty() ? trace.initial : trace.steps.back().snapshot;
  return {{"initial", tuple_to_json(trace.initial)},
          {"initial_dot", snapshot_file_name(0)},
          {"steps", steps},
          {"final", tuple_to_json(last)}};
}

void write_trace(const TraceLog& trace, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_file(dir / snapshot_file_name(0), to_dot(trace.initial, "step 0"));
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    write_file(dir / snapshot_file_name(i + 1),
               to_dot(s.snapshot, "step " + std::to_string(i + 1) + ": " + s.sub_step));
  }
  write_file(dir / "trace.json", trace_manifest(trace).dump(2) + "\n");
}

}  // namespace rhp
