#include "rhp/involution.hpp"

#include <algorithm>

#include "rhp/errors.hpp"

namespace rhp {

namespace {

std::size_t idx(NodeId v) { return static_cast<std::size_t>(v); }

FunctionalGraph& graph_at(ForestTuple& t, int g) { return t.graphs.at(static_cast<std::size_t>(g)); }
const FunctionalGraph& graph_at(const ForestTuple& t, int g) {
  return t.graphs.at(static_cast<std::size_t>(g));
}

}  // namespace

void replay_step(ForestTuple& tuple, const TraceStep& step) {
  for (const auto& mv : step.edge_moves) {
    auto& from = graph_at(tuple, mv.from_graph);
    const auto& a = from.out(mv.edge.src);
    if (!a || a->dst != mv.edge.dst) throw MalformedState("replay: edge not in source graph");
  }
  for (const auto& mv : step.edge_moves) graph_at(tuple, mv.from_graph).clear(mv.edge.src);
  for (const auto& mv : step.edge_moves) {
    auto& to = graph_at(tuple, mv.to_graph);
    if (to.has_out(mv.edge.src)) throw MalformedState("replay: target already has an out-edge");
    to.set(mv.edge.src, mv.edge.dst, mv.edge.color);
  }
  for (const auto& c : step.color_changes) toggle_cycle(tuple, c);
}

CrabwalkContext make_crabwalk_context(const ForestTuple& tuple, int pi_index, int tau_index) {
  const auto& p = graph_at(tuple, pi_index);
  const auto& t = graph_at(tuple, tau_index);
  CrabwalkContext ctx;
  NodeId m = -1;
  for (NodeId s = 1; s <= tuple.k; ++s) {
    if (p.has_out(s) || t.has_out(s)) {
      m = s;
      break;
    }
  }
  if (m < 0) throw PrecondViolation("no special node has an out-edge in either graph");
  if (p.has_out(m) && t.has_out(m)) throw MalformedState("pivot has out-edges in both graphs");
  ctx.m = m;
  ctx.A_index = p.has_out(m) ? pi_index : tau_index;
  ctx.B_index = ctx.A_index == pi_index ? tau_index : pi_index;
  if (p.has_out(tuple.k)) {
    ctx.F_index = pi_index;
  } else if (t.has_out(tuple.k)) {
    ctx.F_index = tau_index;
  } else {
    throw PrecondViolation("neither graph has an out-edge from node k");
  }
  ctx.R_index = ctx.F_index == pi_index ? tau_index : pi_index;

  const auto& a_graph = graph_at(tuple, ctx.A_index);
  if (ctx.A_index == ctx.R_index && a_graph.out(m)->color == Color::Red) {
    NodeId cur = m;
    int guard = 0;
    do {
      const auto& arc = a_graph.out(cur);
      if (!arc || arc->color != Color::Red) {
        throw MalformedState("red meta-edge from pivot does not reach a special node");
      }
      cur = arc->dst;
      if (++guard > tuple.n + 1) throw MalformedState("red meta-edge from pivot does not terminate");
    } while (cur > tuple.k);
    ctx.v = cur;
  }
  return ctx;
}

CrabwalkResult crabwalk_detailed(const ForestTuple& tuple, const CrabwalkContext& ctx) {
  const int n = tuple.n;
  const auto& f = graph_at(tuple, ctx.F_index);
  const auto& r = graph_at(tuple, ctx.R_index);
  const auto& pivot = graph_at(tuple, ctx.A_index).out(ctx.m);
  if (!pivot || pivot->color != Color::Red) {
    throw PrecondViolation("pivot out-edge is not red");
  }

  // light_in[y] = tail of the red R-edge into y
  std::vector<NodeId> light_in(idx(n) + 1, -1);
  for (const auto& e : r.edges()) {
    if (e.color != Color::Red) continue;
    if (light_in[idx(e.dst)] != -1) throw MalformedState("two light red edges into one node");
    light_in[idx(e.dst)] = e.src;
  }
  auto dark_out = [&](NodeId x) { return f.has_out(x) && f.out(x)->color == Color::Red; };

  std::vector<bool> flipped_f(idx(n) + 1, false);
  std::vector<bool> flipped_r(idx(n) + 1, false);
  std::vector<NodeId> touched;
  auto touch = [&](NodeId x) {
    if (!flipped_f[idx(x)] && !flipped_r[idx(x)]) touched.push_back(x);
  };

  CrabwalkResult res;
  bool forward = ctx.A_index == ctx.F_index;
  NodeId cur = ctx.m;
  if (!forward) {
    if (!ctx.v) throw PrecondViolation("walk from R needs the terminal node v");
    cur = *ctx.v;
  }
  const int max_steps = 2 * (n + 1) + 2;
  for (int step = 0;; ++step) {
    if (step > max_steps) throw MalformedState("crabwalk did not terminate");
    if (forward) {
      if (!dark_out(cur) || flipped_f[idx(cur)]) throw MalformedState("crabwalk lost its dark edge");
      touch(cur);
      flipped_f[idx(cur)] = true;
      const NodeId next = f.out(cur)->dst;
      res.walk.push_back({{cur, next, Color::Red}, true});
      res.terminal_graph = ctx.F_index;
      cur = next;
      if (tuple.is_special(cur)) break;
      const NodeId p = light_in[idx(cur)];
      if (p >= 0 && !flipped_r[idx(p)]) forward = false;
    } else {
      const NodeId p = light_in[idx(cur)];
      if (p < 0 || flipped_r[idx(p)]) throw MalformedState("crabwalk lost its light edge");
      touch(p);
      flipped_r[idx(p)] = true;
      res.walk.push_back({{p, cur, Color::Red}, false});
      res.terminal_graph = ctx.R_index;
      cur = p;
      if (tuple.is_special(cur)) break;
      if (dark_out(cur) && !flipped_f[idx(cur)]) forward = true;
    }
  }

  res.tuple = tuple;
  auto& nf = graph_at(res.tuple, ctx.F_index);
  auto& nr = graph_at(res.tuple, ctx.R_index);
  for (NodeId x : touched) {
    const auto fo = f.out(x);
    const auto ro = r.out(x);
    if (flipped_f[idx(x)] && !flipped_r[idx(x)] && ro && ro->color == Color::Red) {
      throw MalformedState("red R-edge would be displaced without being walked");
    }
    if (flipped_r[idx(x)] && !flipped_f[idx(x)] && fo && fo->color == Color::Red) {
      throw MalformedState("red F-edge would be displaced without being walked");
    }
    nf.out(x) = ro;
    nr.out(x) = fo;
    if (fo) res.moves.push_back({{x, fo->dst, fo->color}, ctx.F_index, ctx.R_index});
    if (ro) res.moves.push_back({{x, ro->dst, ro->color}, ctx.R_index, ctx.F_index});
  }
  return res;
}

ForestTuple crabwalk(const ForestTuple& tuple, const CrabwalkContext& ctx) {
  return crabwalk_detailed(tuple, ctx).tuple;
}

Phi1StepResult phi1_step(const ForestTuple& tuple, int pi_index, int tau_index) {
  Phi1StepResult res;
  res.ctx = make_crabwalk_context(tuple, pi_index, tau_index);
  const auto& ctx = res.ctx;
  const auto arc = graph_at(tuple, ctx.A_index).out(ctx.m);
  if (arc->color == Color::Black) {
    res.tuple = tuple;
    if (graph_at(res.tuple, ctx.B_index).has_out(ctx.m)) throw MalformedState("pivot already in B");
    graph_at(res.tuple, ctx.A_index).clear(ctx.m);
    graph_at(res.tuple, ctx.B_index).set(ctx.m, arc->dst, arc->color);
    res.moves.push_back({{ctx.m, arc->dst, arc->color}, ctx.A_index, ctx.B_index});
    res.moved_pivot_edge = true;
    res.ended_in_a = true;
    return res;
  }
  auto walk = crabwalk_detailed(tuple, ctx);
  res.used_crabwalk = true;
  res.moved_pivot_edge = graph_at(walk.tuple, ctx.B_index).has_out(ctx.m);
  res.ended_in_a = walk.terminal_graph == ctx.A_index;
  res.tuple = std::move(walk.tuple);
  res.moves = std::move(walk.moves);
  res.walk = std::move(walk.walk);
  return res;
}

std::pair<ForestTuple, bool> phi1_i(const ForestTuple& tuple, int pi_index, int tau_index) {
  auto res = phi1_step(tuple, pi_index, tau_index);
  return {std::move(res.tuple), res.moved_pivot_edge};
}

std::optional<CycleRecord> phi0_choice(const ForestTuple& tuple) {
  if (!is_in(tuple, SetName::S1)) throw ShapeMismatch("phi0 needs an S0/S1 element");
  for (int g = 0; g < tuple.k; ++g) {
    auto cycles = find_ordinary_cycles(graph_at(tuple, g), g);
    if (!cycles.empty()) return cycles.back();
  }
  return std::nullopt;
}

std::optional<CycleRecord> phi2_choice(const ForestTuple& tuple) {
  if (!is_in(tuple, SetName::S2)) throw ShapeMismatch("phi2 needs an S2/S3 element");
  // graphs in order of the special node they hold: 1, 2, ..., k
  for (NodeId s = 1; s <= tuple.k; ++s) {
    const int g = s2_holder(tuple.k, s);
    auto cycles = find_ordinary_cycles(graph_at(tuple, g), g);
    if (!cycles.empty()) return cycles.back();
  }
  auto meta = find_forbidden_meta_cycles(tuple);
  if (!meta.empty()) return meta.back();
  return std::nullopt;
}

ForestTuple phi0(const ForestTuple& tuple) {
  ForestTuple out = tuple;
  if (auto c = phi0_choice(tuple)) toggle_cycle(out, *c);
  return out;
}

ForestTuple phi2(const ForestTuple& tuple) {
  ForestTuple out = tuple;
  if (auto c = phi2_choice(tuple)) toggle_cycle(out, *c);
  return out;
}

namespace {

ForestTuple run_phi1_step(const ForestTuple& t, int tau, bool& moved, TraceLog* trace) {
  auto res = phi1_step(t, 0, tau);
  moved = res.moved_pivot_edge;
  if (trace) {
    TraceStep step;
    step.involution = "phi1";
    step.sub_step = "phi1^" + std::to_string(tau) + (res.used_crabwalk ? " crabwalk" : " black");
    step.edge_moves = std::move(res.moves);
    step.walk = std::move(res.walk);
    step.ended_in_a = res.ended_in_a;
    step.snapshot = res.tuple;
    trace->steps.push_back(std::move(step));
  }
  return std::move(res.tuple);
}

}  // namespace

ForestTuple phi1(const ForestTuple& tuple, TraceLog* trace) {
  const int k = tuple.k;
  const bool from_s1 = is_in(tuple, SetName::S1);
  if (!from_s1 && !is_in(tuple, SetName::S2)) throw ShapeMismatch("phi1 needs an S1/S2 element");
  if (k == 1) return tuple;

  // pi is always position 0; tau_i is position i
  ForestTuple t = tuple;
  bool moved = false;
  if (from_s1) {
    for (int i = 1; i <= k - 1; ++i) t = run_phi1_step(t, i, moved, trace);
    return t;
  }
  for (int j = k - 1; j >= 1; --j) {
    t = run_phi1_step(t, j, moved, trace);
    if (!moved) {
      for (int i = j + 1; i <= k - 1; ++i) t = run_phi1_step(t, i, moved, trace);
      break;
    }
  }
  return t;
}

int red_cycle_count(const ForestTuple& tuple) {
  int count = 0;
  for (const auto& c : find_all_ordinary_cycles(tuple)) {
    const bool all_red = std::all_of(c.edges.begin(), c.edges.end(),
                                     [](const GraphEdge& ge) { return ge.edge.color == Color::Red; });
    if (all_red) ++count;
  }

  const int k = tuple.k;
  std::vector<NodeId> succ(idx(k) + 1, -1);
  std::vector<int> holder(idx(k) + 1, -1);
  for (NodeId s = 1; s <= k; ++s) {
    for (int g = 0; g < k; ++g) {
      const auto& a = graph_at(tuple, g).out(s);
      if (a && a->color == Color::Red) holder[idx(s)] = g;
    }
    const int g = holder[idx(s)];
    if (g < 0) continue;
    const auto& graph = graph_at(tuple, g);
    NodeId cur = graph.out(s)->dst;
    int guard = 0;
    bool ok = true;
    while (!tuple.is_special(cur)) {
      const auto& a = graph.out(cur);
      if (!a || a->color != Color::Red || ++guard > tuple.n + 1) {
        ok = false;
        break;
      }
      cur = a->dst;
    }
    if (ok && cur != s && cur != 0) succ[idx(s)] = cur;
  }

  std::vector<int> state(idx(k) + 1, 0);
  for (NodeId s = 1; s <= k; ++s) {
    std::vector<NodeId> walk;
    NodeId cur = s;
    while (cur > 0 && state[idx(cur)] == 0) {
      state[idx(cur)] = 1;
      walk.push_back(cur);
      cur = succ[idx(cur)];
    }
    if (cur > 0 && state[idx(cur)] == 1) {
      // a closed chain; within a single graph it is an ordinary cycle, already counted
      auto it = std::find(walk.begin(), walk.end(), cur);
      const int g0 = holder[idx(*it)];
      const bool spans = std::any_of(it, walk.end(), [&](NodeId v) { return holder[idx(v)] != g0; });
      if (spans) ++count;
    }
    for (NodeId v : walk) state[idx(v)] = 2;
  }
  return count;
}

namespace {

void record_toggle(TraceLog& trace, const std::string& involution, const ForestTuple& after,
                   const CycleRecord& c) {
  TraceStep step;
  step.involution = involution;
  step.sub_step = "toggle";
  step.color_changes.push_back(c);
  step.snapshot = after;
  trace.steps.push_back(std::move(step));
}

void record_identity(TraceLog& trace, const std::string& involution, const ForestTuple& t) {
  TraceStep step;
  step.involution = involution;
  step.sub_step = "identity";
  step.snapshot = t;
  trace.steps.push_back(std::move(step));
}

// Alternates phi1 with colour toggles until `done_set` is reached. `own` is the
// toggling involution on the start side, `other` on the far side.
std::pair<ForestTuple, TraceLog> drive(const ForestTuple& start, SetName start_set, SetName done_set,
                                       const DriverOptions& options) {
  if (!is_in(start, start_set)) {
    throw ShapeMismatch("input is not in " + to_string(start_set));
  }
  const bool forward = start_set == SetName::S0;
  const std::string own = forward ? "phi0" : "phi2";
  const std::string far = forward ? "phi2" : "phi0";

  TraceLog trace;
  trace.initial = start;
  record_identity(trace, own, start);
  if (start.k == 1) return {start, std::move(trace)};

  ForestTuple t = start;
  std::uint64_t steps = 0;
  while (true) {
    if (++steps > options.step_bound) throw NonTermination("step bound exceeded");
    t = phi1(t, &trace);
    const bool in_s2 = has_s2_shape(t);
    const bool far_side = forward == in_s2;
    const auto choice = in_s2 ? phi2_choice(t) : phi0_choice(t);
    const std::string& inv = far_side ? far : own;
    if (!choice) {
      if (!far_side) throw MalformedState("bijection walk returned to " + to_string(start_set));
      record_identity(trace, inv, t);
      if (!is_in(t, done_set)) throw MalformedState("walk ended outside " + to_string(done_set));
      return {t, std::move(trace)};
    }
    toggle_cycle(t, *choice);
    record_toggle(trace, inv, t, *choice);
  }
}

}  // namespace

std::pair<ForestTuple, TraceLog> garsia_milne_forward(const ForestTuple& tuple,
                                                      const DriverOptions& options) {
  return drive(tuple, SetName::S0, SetName::S3, options);
}

std::pair<ForestTuple, TraceLog> garsia_milne_backward(const ForestTuple& tuple,
                                                       const DriverOptions& options) {
  return drive(tuple, SetName::S3, SetName::S0, options);
}

}  // namespace rhp
