#pragma once

// Tuples of coloured functional graphs on the node set {0..n}, with the cycle
// and meta-cycle structure the signed sets S0..S3 are defined by.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rhp {

using NodeId = std::int32_t;

enum class Color : std::uint8_t { Black, Red };

inline Color toggled(Color c) { return c == Color::Black ? Color::Red : Color::Black; }

struct ColoredEdge {
  NodeId src = 0;
  NodeId dst = 0;
  Color color = Color::Black;

  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

// Target and colour of a node's single out-edge.
struct Arc {
  NodeId dst = 0;
  Color color = Color::Black;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A directed graph on {0..n} in which every node has at most one out-edge.
class FunctionalGraph {
 public:
  FunctionalGraph() = default;
  explicit FunctionalGraph(int n) : out_(static_cast<std::size_t>(n) + 1) {}

  int n() const { return static_cast<int>(out_.size()) - 1; }

  bool has_out(NodeId v) const { return out_[static_cast<std::size_t>(v)].has_value(); }
  const std::optional<Arc>& out(NodeId v) const { return out_[static_cast<std::size_t>(v)]; }
  std::optional<Arc>& out(NodeId v) { return out_[static_cast<std::size_t>(v)]; }

  // Replaces any existing out-edge of src. Throws on loops or out-of-range ids.
  void set(NodeId src, NodeId dst, Color color = Color::Black);
  void clear(NodeId src) { out(src).reset(); }
  void set_color(NodeId src, Color color);

  // Edges sorted ascending by (src, dst).
  std::vector<ColoredEdge> edges() const;
  std::vector<NodeId> out_nodes() const;
  std::size_t edge_count() const;

  friend bool operator==(const FunctionalGraph&, const FunctionalGraph&) = default;
  friend auto operator<=>(const FunctionalGraph& a, const FunctionalGraph& b) {
    return a.out_ <=> b.out_;
  }

 private:
  std::vector<std::optional<Arc>> out_;
};

// Ordered k-tuple of functional graphs sharing the node set {0..n}.
struct ForestTuple {
  int n = 1;
  int k = 1;
  std::vector<FunctionalGraph> graphs;

  ForestTuple() = default;
  ForestTuple(int n_, int k_);

  bool is_special(NodeId v) const { return v <= k; }

  friend bool operator==(const ForestTuple&, const ForestTuple&) = default;
  friend auto operator<=>(const ForestTuple&, const ForestTuple&) = default;
};

struct MetaEdge {
  NodeId start = 0;
  NodeId end = 0;
  std::vector<ColoredEdge> path;
  // Set when the walk re-entered a node before reaching a sink; `end` is then
  // the first repeated node.
  bool cyclic = false;
};

enum class CycleKind : std::uint8_t { OrdinaryCycle, ForbiddenMetaCycle };

struct GraphEdge {
  int graph_index = 0;
  ColoredEdge edge;

  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

struct CycleRecord {
  CycleKind kind = CycleKind::OrdinaryCycle;
  std::vector<GraphEdge> edges;
  std::vector<NodeId> nodes;  // sorted
  NodeId max_node = 0;
  bool mixed = false;
  Color color = Color::Black;  // meaningful when !mixed

  // Largest special node on the cycle (k-dependent), used as a tie-break.
  NodeId max_special(int k) const;
};

enum class SetName : std::uint8_t { S0, S1, S2, S3, Invalid };

std::string to_string(SetName s);
std::optional<SetName> parse_set_name(const std::string& s);

struct MembershipTag {
  SetName set = SetName::Invalid;
  int sign = +1;

  friend bool operator==(const MembershipTag&, const MembershipTag&) = default;
};

MetaEdge trace_meta_edge(const ForestTuple& tuple, int graph_index, NodeId start);

std::vector<CycleRecord> find_ordinary_cycles(const FunctionalGraph& graph, int graph_index = 0);

// Every ordinary cycle of every graph, in graph order, each graph's cycles by
// ascending max_node.
std::vector<CycleRecord> find_all_ordinary_cycles(const ForestTuple& tuple);

std::vector<CycleRecord> find_forbidden_meta_cycles(const ForestTuple& tuple);

// Graph index expected to hold the out-edge of special node s (1 <= s <= k) in
// the S2/S3 shape: position 0 holds k, position i holds i.
int s2_holder(int k, NodeId s);
// Inverse of s2_holder: the special node held by graph position g in S2 shape.
NodeId s2_held_node(int k, int g);

// Shape predicates look only at which nodes have out-edges.
bool has_s1_shape(const ForestTuple& tuple);
bool has_s2_shape(const ForestTuple& tuple);

// Full membership tests, including colour rules.
bool is_in(const ForestTuple& tuple, SetName which);

MembershipTag classify(const ForestTuple& tuple);

int sign_of(const ForestTuple& tuple);

using WeightMultiset = std::vector<std::pair<NodeId, NodeId>>;  // sorted

WeightMultiset weight_multiset(const ForestTuple& tuple);

// Throws MalformedState if some graph is not over {0..n}, has a loop, or node
// 0 has an out-edge.
void check_well_formed(const ForestTuple& tuple);

// Toggles the colour of every edge in the record.
void toggle_cycle(ForestTuple& tuple, const CycleRecord& cycle);

}  // namespace rhp
