#pragma once

// The sign-reversing involutions phi0, phi1 (built from the crabwalk), phi2
// and the driver that chains them into a bijection S0 -> S3.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rhp/forest.hpp"

namespace rhp {

struct EdgeMove {
  ColoredEdge edge;
  int from_graph = 0;
  int to_graph = 0;
};

// One crabwalk edge traversal, in walk order.
struct WalkStep {
  ColoredEdge edge;
  bool forward = true;  // forward along a dark (F) edge, else backward along a light (R) edge
};

struct TraceStep {
  std::string involution;  // "phi0", "phi1" or "phi2"
  std::string sub_step;    // e.g. "identity", "toggle", "phi1^2 crabwalk"
  std::vector<EdgeMove> edge_moves;  // applied simultaneously
  std::vector<CycleRecord> color_changes;  // edges carry their colour before the toggle
  std::vector<WalkStep> walk;
  bool ended_in_a = true;  // phi1 steps only
  ForestTuple snapshot;
};

struct TraceLog {
  ForestTuple initial;
  std::vector<TraceStep> steps;
};

// Applies one step's moves and colour changes to `tuple`.
void replay_step(ForestTuple& tuple, const TraceStep& step);

struct CrabwalkContext {
  int F_index = 0;  // holds the out-edge of k
  int R_index = 0;
  int A_index = 0;  // holds the out-edge of the pivot m
  int B_index = 0;
  NodeId m = 0;
  std::optional<NodeId> v;  // first special node on m's red path in R, when A == R
};

CrabwalkContext make_crabwalk_context(const ForestTuple& tuple, int pi_index, int tau_index);

struct CrabwalkResult {
  ForestTuple tuple;
  std::vector<WalkStep> walk;
  std::vector<EdgeMove> moves;
  int terminal_graph = 0;  // graph owning the walk's last traversed edge
};

CrabwalkResult crabwalk_detailed(const ForestTuple& tuple, const CrabwalkContext& ctx);
ForestTuple crabwalk(const ForestTuple& tuple, const CrabwalkContext& ctx);

struct Phi1StepResult {
  ForestTuple tuple;
  bool moved_pivot_edge = false;
  bool ended_in_a = true;  // a black move counts as ending in A
  bool used_crabwalk = false;
  CrabwalkContext ctx;
  std::vector<EdgeMove> moves;
  std::vector<WalkStep> walk;
};

Phi1StepResult phi1_step(const ForestTuple& tuple, int pi_index, int tau_index);

// The pairwise involution phi1^i on graphs pi_index and tau_index. Returns the
// new tuple and whether the pivot's out-edge changed graphs.
std::pair<ForestTuple, bool> phi1_i(const ForestTuple& tuple, int pi_index, int tau_index);

// Cycle each involution would toggle, if any.
std::optional<CycleRecord> phi0_choice(const ForestTuple& tuple);
std::optional<CycleRecord> phi2_choice(const ForestTuple& tuple);

ForestTuple phi0(const ForestTuple& tuple);
ForestTuple phi1(const ForestTuple& tuple, TraceLog* trace = nullptr);
ForestTuple phi2(const ForestTuple& tuple);

// Red ordinary cycles plus red special-node meta-cycles, on any intermediate
// state. Equals the red cycle count on S1/S2 elements.
int red_cycle_count(const ForestTuple& tuple);

inline constexpr std::uint64_t kDefaultStepBound = 40'000'000;

struct DriverOptions {
  std::uint64_t step_bound = kDefaultStepBound;
};

std::pair<ForestTuple, TraceLog> garsia_milne_forward(const ForestTuple& tuple,
                                                      const DriverOptions& options = {});
std::pair<ForestTuple, TraceLog> garsia_milne_backward(const ForestTuple& tuple,
                                                       const DriverOptions& options = {});

}  // namespace rhp
