#include "rhp/tuple_io.hpp"

#include <fstream>
#include <sstream>

#include "rhp/errors.hpp"

namespace rhp {

nlohmann::ordered_json tuple_to_json(const ForestTuple& tuple) {
  nlohmann::ordered_json graphs = nlohmann::ordered_json::array();
  for (const auto& g : tuple.graphs) {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) {
      edges.push_back({e.src, e.dst, e.color == Color::Red ? "red" : "black"});
    }
    graphs.push_back({{"edges", edges}});
  }
  nlohmann::ordered_json j;
  j["n"] = tuple.n;
  j["k"] = tuple.k;
  j["graphs"] = graphs;
  return j;
}

ForestTuple tuple_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    if (n < 1 || k < 1 || k > n) throw ParseError("need 1 <= k <= n");
    const auto& graphs = j.at("graphs");
    if (!graphs.is_array() || static_cast<int>(graphs.size()) != k) {
      throw ParseError("expected exactly k graphs");
    }
    ForestTuple t(n, k);
    for (int g = 0; g < k; ++g) {
      for (const auto& e : graphs[static_cast<std::size_t>(g)].at("edges")) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3) throw ParseError("edge must be [src,dst,color]");
        const NodeId src = e[0].get<NodeId>();
        const NodeId dst = e[1].get<NodeId>();
        Color color = Color::Black;
        if (e.size() == 3) {
          const auto c = e[2].get<std::string>();
          if (c == "red") {
            color = Color::Red;
          } else if (c != "black") {
            throw ParseError("unknown colour '" + c + "'");
          }
        }
        auto& graph = t.graphs[static_cast<std::size_t>(g)];
        if (src < 0 || src > n || dst < 0 || dst > n || src == dst) {
          throw ParseError("bad edge " + std::to_string(src) + "->" + std::to_string(dst));
        }
        if (graph.has_out(src)) {
          throw ParseError("node " + std::to_string(src) + " has two out-edges in graph " +
                           std::to_string(g));
        }
        graph.set(src, dst, color);
      }
    }
    return t;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(ex.what());
  }
}

std::string dump_tuple(const ForestTuple& tuple) { return tuple_to_json(tuple).dump(); }

ForestTuple parse_tuple(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(ex.what());
  }
  return tuple_from_json(j);
}

ForestTuple read_tuple_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tuple(ss.str());
}

std::string brief(const ForestTuple& tuple) {
  std::string s = "[";
  for (std::size_t g = 0; g < tuple.graphs.size(); ++g) {
    if (g) s += " |";
    for (const auto& e : tuple.graphs[g].edges()) {
      s += " " + std::to_string(e.src) + ">" + std::to_string(e.dst);
      if (e.color == Color::Red) s += "*";
    }
  }
  return s + " ]";
}

}  // namespace rhp
