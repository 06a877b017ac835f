#include "rhp/forest.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rhp/errors.hpp"

namespace rhp {

void FunctionalGraph::set(NodeId src, NodeId dst, Color color) {
  if (src < 0 || src > n() || dst < 0 || dst > n()) {
    throw MalformedState("edge " + std::to_string(src) + "->" + std::to_string(dst) +
                         " outside node set 0.." + std::to_string(n()));
  }
  if (src == dst) throw MalformedState("loop at node " + std::to_string(src));
  out(src) = Arc{dst, color};
}

void FunctionalGraph::set_color(NodeId src, Color color) {
  if (!has_out(src)) throw NoOutEdge("node " + std::to_string(src));
  out(src)->color = color;
}

std::vector<ColoredEdge> FunctionalGraph::edges() const {
  std::vector<ColoredEdge> result;
  for (NodeId v = 0; v <= n(); ++v) {
    if (const auto& a = out(v)) result.push_back({v, a->dst, a->color});
  }
  return result;
}

std::vector<NodeId> FunctionalGraph::out_nodes() const {
  std::vector<NodeId> result;
  for (NodeId v = 0; v <= n(); ++v) {
    if (has_out(v)) result.push_back(v);
  }
  return result;
}

std::size_t FunctionalGraph::edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(out_.begin(), out_.end(), [](const auto& a) { return a.has_value(); }));
}

ForestTuple::ForestTuple(int n_, int k_) : n(n_), k(k_) {
  if (n < 1 || k < 1 || k > n) {
    throw InvalidSpec("need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  graphs.assign(static_cast<std::size_t>(k), FunctionalGraph(n));
}

NodeId CycleRecord::max_special(int k) const {
  NodeId best = -1;
  for (NodeId v : nodes) {
    if (v <= k) best = std::max(best, v);
  }
  return best;
}

std::string to_string(SetName s) {
  switch (s) {
    case SetName::S0: return "S0";
    case SetName::S1: return "S1";
    case SetName::S2: return "S2";
    case SetName::S3: return "S3";
    case SetName::Invalid: return "Invalid";
  }
  return "Invalid";
}

std::optional<SetName> parse_set_name(const std::string& s) {
  if (s == "S0") return SetName::S0;
  if (s == "S1") return SetName::S1;
  if (s == "S2") return SetName::S2;
  if (s == "S3") return SetName::S3;
  return std::nullopt;
}

MetaEdge trace_meta_edge(const ForestTuple& tuple, int graph_index, NodeId start) {
  const auto& g = tuple.graphs.at(static_cast<std::size_t>(graph_index));
  if (!g.has_out(start)) {
    throw NoOutEdge("node " + std::to_string(start) + " in graph " + std::to_string(graph_index));
  }
  MetaEdge me;
  me.start = start;
  std::vector<bool> seen(static_cast<std::size_t>(tuple.n) + 1, false);
  seen[static_cast<std::size_t>(start)] = true;
  NodeId cur = start;
  while (true) {
    const auto& a = g.out(cur);
    if (!a) {
      me.end = cur;
      break;
    }
    me.path.push_back({cur, a->dst, a->color});
    cur = a->dst;
    if (seen[static_cast<std::size_t>(cur)]) {
      me.end = cur;
      me.cyclic = true;
      break;
    }
    seen[static_cast<std::size_t>(cur)] = true;
  }
  return me;
}

namespace {

void finish_record(CycleRecord& rec) {
  std::sort(rec.nodes.begin(), rec.nodes.end());
  rec.nodes.erase(std::unique(rec.nodes.begin(), rec.nodes.end()), rec.nodes.end());
  rec.max_node = rec.nodes.empty() ? 0 : rec.nodes.back();
  rec.mixed = false;
  rec.color = rec.edges.empty() ? Color::Black : rec.edges.front().edge.color;
  for (const auto& ge : rec.edges) {
    if (ge.edge.color != rec.color) rec.mixed = true;
  }
}

bool cycle_order(const CycleRecord& a, const CycleRecord& b, int k) {
  if (a.max_node != b.max_node) return a.max_node < b.max_node;
  return a.max_special(k) < b.max_special(k);
}

}  // namespace

std::vector<CycleRecord> find_ordinary_cycles(const FunctionalGraph& graph, int graph_index) {
  const auto size = static_cast<std::size_t>(graph.n()) + 1;
  // 0 = unvisited, 1 = on the current walk, 2 = finished
  std::vector<int> state(size, 0);
  std::vector<CycleRecord> cycles;
  for (NodeId s = 0; s <= graph.n(); ++s) {
    if (state[static_cast<std::size_t>(s)] != 0) continue;
    std::vector<NodeId> walk;
    NodeId cur = s;
    while (true) {
      auto& st = state[static_cast<std::size_t>(cur)];
      if (st == 2) break;
      if (st == 1) {
        // cur closes a cycle; collect it starting from its smallest node
        auto it = std::find(walk.begin(), walk.end(), cur);
        std::vector<NodeId> ring(it, walk.end());
        std::rotate(ring.begin(), std::min_element(ring.begin(), ring.end()), ring.end());
        CycleRecord rec;
        rec.kind = CycleKind::OrdinaryCycle;
        for (NodeId v : ring) {
          const auto& a = graph.out(v);
          rec.edges.push_back({graph_index, {v, a->dst, a->color}});
          rec.nodes.push_back(v);
        }
        finish_record(rec);
        cycles.push_back(std::move(rec));
        break;
      }
      st = 1;
      walk.push_back(cur);
      const auto& a = graph.out(cur);
      if (!a) break;
      cur = a->dst;
    }
    for (NodeId v : walk) state[static_cast<std::size_t>(v)] = 2;
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const CycleRecord& a, const CycleRecord& b) { return a.max_node < b.max_node; });
  return cycles;
}

std::vector<CycleRecord> find_all_ordinary_cycles(const ForestTuple& tuple) {
  std::vector<CycleRecord> all;
  for (int g = 0; g < static_cast<int>(tuple.graphs.size()); ++g) {
    auto c = find_ordinary_cycles(tuple.graphs[static_cast<std::size_t>(g)], g);
    all.insert(all.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  }
  return all;
}

std::vector<CycleRecord> find_forbidden_meta_cycles(const ForestTuple& tuple) {
  const int k = tuple.k;
  // holder[s] = graph holding the out-edge of special node s, or -1
  std::vector<int> holder(static_cast<std::size_t>(k) + 1, -1);
  for (int g = 0; g < static_cast<int>(tuple.graphs.size()); ++g) {
    int count = 0;
    for (NodeId s = 0; s <= k; ++s) {
      if (!tuple.graphs[static_cast<std::size_t>(g)].has_out(s)) continue;
      if (s == 0) throw ShapeMismatch("node 0 has an out-edge in graph " + std::to_string(g));
      if (++count > 1) {
        throw ShapeMismatch("graph " + std::to_string(g) + " has more than one special out-node");
      }
      if (holder[static_cast<std::size_t>(s)] != -1) {
        throw ShapeMismatch("special node " + std::to_string(s) + " has out-edges in two graphs");
      }
      holder[static_cast<std::size_t>(s)] = g;
    }
  }

  std::vector<NodeId> succ(static_cast<std::size_t>(k) + 1, -1);
  std::vector<MetaEdge> meta(static_cast<std::size_t>(k) + 1);
  for (NodeId s = 1; s <= k; ++s) {
    const int g = holder[static_cast<std::size_t>(s)];
    if (g < 0) continue;
    meta[static_cast<std::size_t>(s)] = trace_meta_edge(tuple, g, s);
    const auto& me = meta[static_cast<std::size_t>(s)];
    if (me.cyclic) continue;
    if (me.end >= 1 && me.end <= k && holder[static_cast<std::size_t>(me.end)] >= 0) {
      succ[static_cast<std::size_t>(s)] = me.end;
    }
  }

  std::vector<CycleRecord> cycles;
  std::vector<int> state(static_cast<std::size_t>(k) + 1, 0);
  for (NodeId s = 1; s <= k; ++s) {
    if (state[static_cast<std::size_t>(s)] != 0) continue;
    std::vector<NodeId> walk;
    NodeId cur = s;
    while (cur >= 1) {
      auto& st = state[static_cast<std::size_t>(cur)];
      if (st == 2) break;
      if (st == 1) {
        auto it = std::find(walk.begin(), walk.end(), cur);
        std::vector<NodeId> ring(it, walk.end());
        std::rotate(ring.begin(), std::min_element(ring.begin(), ring.end()), ring.end());
        CycleRecord rec;
        rec.kind = CycleKind::ForbiddenMetaCycle;
        for (NodeId v : ring) {
          const int g = holder[static_cast<std::size_t>(v)];
          for (const auto& e : meta[static_cast<std::size_t>(v)].path) {
            rec.edges.push_back({g, e});
            rec.nodes.push_back(e.src);
            rec.nodes.push_back(e.dst);
          }
        }
        finish_record(rec);
        cycles.push_back(std::move(rec));
        break;
      }
      st = 1;
      walk.push_back(cur);
      cur = succ[static_cast<std::size_t>(cur)];
    }
    for (NodeId v : walk) state[static_cast<std::size_t>(v)] = 2;
  }
  std::sort(cycles.begin(), cycles.end(),
            [k](const CycleRecord& a, const CycleRecord& b) { return cycle_order(a, b, k); });
  return cycles;
}

int s2_holder(int k, NodeId s) { return s == k ? 0 : static_cast<int>(s); }

NodeId s2_held_node(int k, int g) { return g == 0 ? k : static_cast<NodeId>(g); }

namespace {

bool out_set_is(const FunctionalGraph& g, int k, NodeId extra_special) {
  for (NodeId v = 0; v <= g.n(); ++v) {
    const bool want = v > k || v == extra_special;
    if (g.has_out(v) != want) return false;
  }
  return true;
}

bool graph_count_ok(const ForestTuple& t) {
  return t.n >= 1 && t.k >= 1 && t.k <= t.n && static_cast<int>(t.graphs.size()) == t.k;
}

// Red edges must be exactly the red records' edges, and no record mixed.
bool colors_consistent(const ForestTuple& t, const std::vector<CycleRecord>& records) {
  std::set<std::pair<int, NodeId>> red_in_records;
  for (const auto& r : records) {
    if (r.mixed) return false;
    if (r.color != Color::Red) continue;
    for (const auto& ge : r.edges) red_in_records.insert({ge.graph_index, ge.edge.src});
  }
  for (int g = 0; g < t.k; ++g) {
    for (const auto& e : t.graphs[static_cast<std::size_t>(g)].edges()) {
      if (e.color == Color::Red && !red_in_records.count({g, e.src})) return false;
    }
  }
  return true;
}

int red_count(const std::vector<CycleRecord>& records) {
  return static_cast<int>(std::count_if(records.begin(), records.end(),
                                        [](const CycleRecord& r) { return r.color == Color::Red; }));
}

std::vector<CycleRecord> s2_records(const ForestTuple& t) {
  auto records = find_all_ordinary_cycles(t);
  auto meta = find_forbidden_meta_cycles(t);
  records.insert(records.end(), meta.begin(), meta.end());
  return records;
}

}  // namespace

bool has_s1_shape(const ForestTuple& tuple) {
  if (!graph_count_ok(tuple)) return false;
  for (int g = 0; g < tuple.k; ++g) {
    const auto& graph = tuple.graphs[static_cast<std::size_t>(g)];
    if (graph.n() != tuple.n) return false;
    if (g == 0) {
      for (NodeId v = 0; v <= tuple.n; ++v) {
        if (graph.has_out(v) != (v != 0)) return false;
      }
    } else if (!out_set_is(graph, tuple.k, -1)) {
      return false;
    }
  }
  return true;
}

bool has_s2_shape(const ForestTuple& tuple) {
  if (!graph_count_ok(tuple)) return false;
  for (int g = 0; g < tuple.k; ++g) {
    const auto& graph = tuple.graphs[static_cast<std::size_t>(g)];
    if (graph.n() != tuple.n) return false;
    if (!out_set_is(graph, tuple.k, s2_held_node(tuple.k, g))) return false;
  }
  return true;
}

bool is_in(const ForestTuple& tuple, SetName which) {
  switch (which) {
    case SetName::S0:
    case SetName::S1: {
      if (!has_s1_shape(tuple)) return false;
      const auto records = find_all_ordinary_cycles(tuple);
      if (!colors_consistent(tuple, records)) return false;
      return which == SetName::S1 || records.empty();
    }
    case SetName::S2:
    case SetName::S3: {
      if (!has_s2_shape(tuple)) return false;
      const auto records = s2_records(tuple);
      if (!colors_consistent(tuple, records)) return false;
      return which == SetName::S2 || records.empty();
    }
    case SetName::Invalid:
      return false;
  }
  return false;
}

MembershipTag classify(const ForestTuple& tuple) {
  if (has_s1_shape(tuple)) {
    const auto records = find_all_ordinary_cycles(tuple);
    if (!colors_consistent(tuple, records)) return {SetName::Invalid, +1};
    if (records.empty()) return {SetName::S0, +1};
    return {SetName::S1, red_count(records) % 2 == 0 ? +1 : -1};
  }
  if (has_s2_shape(tuple)) {
    const auto records = s2_records(tuple);
    if (!colors_consistent(tuple, records)) return {SetName::Invalid, +1};
    if (records.empty()) return {SetName::S3, +1};
    return {SetName::S2, red_count(records) % 2 == 0 ? +1 : -1};
  }
  return {SetName::Invalid, +1};
}

int sign_of(const ForestTuple& tuple) {
  const auto tag = classify(tuple);
  if (tag.set == SetName::Invalid) throw ShapeMismatch("tuple is not in S1 or S2");
  return tag.sign;
}

WeightMultiset weight_multiset(const ForestTuple& tuple) {
  WeightMultiset w;
  for (const auto& g : tuple.graphs) {
    for (const auto& e : g.edges()) w.emplace_back(e.src, e.dst);
  }
  std::sort(w.begin(), w.end());
  return w;
}

void check_well_formed(const ForestTuple& tuple) {
  if (!graph_count_ok(tuple)) throw MalformedState("graph count does not match k");
  for (const auto& g : tuple.graphs) {
    if (g.n() != tuple.n) throw MalformedState("graph node set does not match n");
    if (g.has_out(0)) throw MalformedState("node 0 has an out-edge");
    for (const auto& e : g.edges()) {
      if (e.src == e.dst) throw MalformedState("loop");
    }
  }
}

void toggle_cycle(ForestTuple& tuple, const CycleRecord& cycle) {
  for (const auto& ge : cycle.edges) {
    auto& g = tuple.graphs.at(static_cast<std::size_t>(ge.graph_index));
    g.set_color(ge.edge.src, toggled(g.out(ge.edge.src)->color));
  }
}

}  // namespace rhp
