#include "rhp/enumeration.hpp"

#include <algorithm>
#include <limits>

#include "rhp/errors.hpp"

namespace rhp {

namespace {

struct Slot {
  int graph;
  NodeId node;
};

// Iterates over every assignment of a target to each slot, first slot most
// significant, targets ascending.
template <typename Fn>
void for_each_assignment(ForestTuple& t, const std::vector<Slot>& slots, Fn&& fn) {
  const int n = t.n;
  std::vector<NodeId> target(slots.size());
  auto first_target = [](NodeId node) { return node == 0 ? 1 : 0; };
  auto next_target = [n](NodeId node, NodeId cur) -> NodeId {
    NodeId nxt = cur + 1;
    if (nxt == node) ++nxt;
    return nxt > n ? -1 : nxt;
  };
  for (std::size_t s = 0; s < slots.size(); ++s) {
    target[s] = first_target(slots[s].node);
    t.graphs[static_cast<std::size_t>(slots[s].graph)].set(slots[s].node, target[s]);
  }
  while (true) {
    fn(t);
    std::size_t s = slots.size();
    while (s > 0) {
      --s;
      const NodeId nxt = next_target(slots[s].node, target[s]);
      auto& g = t.graphs[static_cast<std::size_t>(slots[s].graph)];
      if (nxt >= 0) {
        target[s] = nxt;
        g.set(slots[s].node, nxt);
        break;
      }
      target[s] = first_target(slots[s].node);
      g.set(slots[s].node, target[s]);
      if (s == 0) return;
    }
    if (slots.empty()) return;
  }
}

bool is_acyclic(const FunctionalGraph& g) {
  const int n = g.n();
  std::vector<int> state(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId s = 0; s <= n; ++s) {
    NodeId cur = s;
    std::vector<NodeId> walk;
    while (state[static_cast<std::size_t>(cur)] == 0) {
      state[static_cast<std::size_t>(cur)] = 1;
      walk.push_back(cur);
      const auto& a = g.out(cur);
      if (!a) break;
      cur = a->dst;
      if (state[static_cast<std::size_t>(cur)] == 1) return false;
    }
    for (NodeId v : walk) state[static_cast<std::size_t>(v)] = 2;
  }
  return true;
}

std::vector<Slot> shape_slots(int n, int k, SetName which) {
  std::vector<Slot> slots;
  const bool s1 = which == SetName::S0 || which == SetName::S1;
  for (int g = 0; g < k; ++g) {
    for (NodeId v = 1; v <= n; ++v) {
      bool has;
      if (s1) {
        has = g == 0 || v > k;
      } else {
        has = v > k || v == s2_held_node(k, g);
      }
      if (has) slots.push_back({g, v});
    }
  }
  return slots;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

}  // namespace

std::vector<FunctionalGraph> enumerate_forests(int n, const RootedForestSpec& spec) {
  if (n < 1) throw InvalidSpec("n must be >= 1");
  std::vector<bool> is_root(static_cast<std::size_t>(n) + 1, false);
  for (NodeId r : spec.roots) {
    if (r < 0 || r > n) throw InvalidSpec("root " + std::to_string(r) + " outside 0.." + std::to_string(n));
    is_root[static_cast<std::size_t>(r)] = true;
  }
  if (spec.required_meta_edge) {
    const auto [from, to] = *spec.required_meta_edge;
    if (from < 0 || from > n || to < 0 || to > n) throw InvalidSpec("meta-edge endpoint out of range");
    if (is_root[static_cast<std::size_t>(from)]) throw InvalidSpec("meta-edge starts at a root");
  }

  ForestTuple scratch(n, 1);
  std::vector<Slot> slots;
  for (NodeId v = 0; v <= n; ++v) {
    if (!is_root[static_cast<std::size_t>(v)]) slots.push_back({0, v});
  }
  std::vector<FunctionalGraph> out;
  for_each_assignment(scratch, slots, [&](const ForestTuple& t) {
    const auto& g = t.graphs[0];
    if (!is_acyclic(g)) return;
    if (spec.required_meta_edge) {
      const auto me = trace_meta_edge(t, 0, spec.required_meta_edge->first);
      if (me.end != spec.required_meta_edge->second) return;
    }
    out.push_back(g);
  });
  return out;
}

std::uint64_t s1_shape_count(int n, int k) {
  std::uint64_t count = 1;
  const auto choices = static_cast<std::uint64_t>(n);
  const int slots = n + (n - k) * (k - 1);
  for (int i = 0; i < slots; ++i) count = sat_mul(count, choices);
  return count;
}

void check_instance(int n, int k, std::uint64_t cap) {
  if (n < 1 || k < 1 || k > n) {
    throw InvalidSpec("need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  const auto count = s1_shape_count(n, k);
  if (count > cap) {
    throw InstanceTooLarge("n=" + std::to_string(n) + " k=" + std::to_string(k) + " has " +
                           std::to_string(count) + " S1 shapes (cap " + std::to_string(cap) + ")");
  }
}

void for_each_in_set(int n, int k, SetName which, const TupleVisitor& visit, std::uint64_t cap) {
  check_instance(n, k, cap);
  if (which == SetName::Invalid) throw InvalidSpec("cannot enumerate Invalid");
  const bool s1 = which == SetName::S0 || which == SetName::S1;
  const bool black_only = which == SetName::S0 || which == SetName::S3;

  ForestTuple scratch(n, k);
  for_each_assignment(scratch, shape_slots(n, k, which), [&](const ForestTuple& shape) {
    auto records = find_all_ordinary_cycles(shape);
    if (!s1) {
      auto meta = find_forbidden_meta_cycles(shape);
      records.insert(records.end(), meta.begin(), meta.end());
    }
    if (black_only) {
      if (records.empty()) visit(shape);
      return;
    }
    const std::uint64_t colourings = std::uint64_t{1} << records.size();
    for (std::uint64_t mask = 0; mask < colourings; ++mask) {
      ForestTuple t = shape;
      for (std::size_t r = 0; r < records.size(); ++r) {
        if (mask & (std::uint64_t{1} << r)) toggle_cycle(t, records[r]);
      }
      visit(t);
    }
  });
}

std::vector<ForestTuple> enumerate_set(int n, int k, SetName which, std::uint64_t cap) {
  std::vector<ForestTuple> out;
  for_each_in_set(n, k, which, [&](const ForestTuple& t) { out.push_back(t); }, cap);
  return out;
}

std::vector<ForestTuple> enumerate_R_sigma(int n, int k, const PermutationK& sigma) {
  if (n < 1 || k < 1 || k > n) throw InvalidSpec("need 1 <= k <= n");
  if (sigma.k() != k || !sigma.is_valid()) throw InvalidSpec("sigma is not a permutation of 1..k");
  std::vector<std::vector<FunctionalGraph>> parts;
  for (int i = 1; i <= k; ++i) {
    RootedForestSpec spec;
    for (NodeId r = 0; r <= k; ++r) {
      if (r != i) spec.roots.push_back(r);
    }
    if (sigma(i) != i) spec.required_meta_edge = {i, sigma(i)};
    parts.push_back(enumerate_forests(n, spec));
  }
  std::vector<ForestTuple> out;
  for (const auto& p : parts) {
    if (p.empty()) return out;
  }
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    ForestTuple t(n, k);
    for (std::size_t g = 0; g < idx.size(); ++g) t.graphs[g] = parts[g][idx[g]];
    out.push_back(std::move(t));
    std::size_t g = idx.size();
    while (g > 0) {
      --g;
      if (++idx[g] < parts[g].size()) break;
      idx[g] = 0;
      if (g == 0) return out;
    }
  }
}

EdgePolynomial monomial_of(const ForestTuple& tuple) {
  return EdgePolynomial::monomial(weight_multiset(tuple));
}

EdgePolynomial monomial_sum(const std::vector<ForestTuple>& tuples) {
  // accumulate counts per multiset before building the polynomial
  std::map<Monomial, BigInt> counts;
  for (const auto& t : tuples) counts[weight_multiset(t)] += 1;
  EdgePolynomial sum;
  for (const auto& [m, c] : counts) sum += EdgePolynomial::monomial(m, c);
  return sum;
}

int r_sigma_weight(const PermutationK& sigma) {
  const int minor_sign = sigma.moved_points() % 2 == 0 ? +1 : -1;
  return inversion_sign(sigma) * minor_sign;
}

PermutationK meta_cycle_permutation(const ForestTuple& tuple) {
  auto sigma = PermutationK::identity(tuple.k);
  for (const auto& c : find_forbidden_meta_cycles(tuple)) {
    for (const auto& ge : c.edges) {
      const NodeId s = ge.edge.src;
      if (s < 1 || s > tuple.k) continue;
      const auto me = trace_meta_edge(tuple, ge.graph_index, s);
      sigma.images[static_cast<std::size_t>(s - 1)] = me.end;
    }
  }
  return sigma;
}

namespace {

void for_each_black_forest_tuple(int n, int k, const std::function<void(const ForestTuple&, bool)>& visit,
                                 std::uint64_t cap) {
  check_instance(n, k, cap);
  ForestTuple scratch(n, k);
  for_each_assignment(scratch, shape_slots(n, k, SetName::S2), [&](const ForestTuple& shape) {
    if (!find_all_ordinary_cycles(shape).empty()) return;
    visit(shape, !find_forbidden_meta_cycles(shape).empty());
  });
}

}  // namespace

ForbiddenCensus forbidden_census(int n, int k, std::uint64_t cap) {
  ForbiddenCensus census;
  const auto perms = all_permutations(k);
  std::vector<std::uint64_t> counts(perms.size(), 0);
  for_each_black_forest_tuple(n, k, [&](const ForestTuple& t, bool forbidden) {
    ++census.forest_tuples;
    if (!forbidden) return;
    ++census.forbidden;
    const auto sigma = meta_cycle_permutation(t);
    const auto it = std::find(perms.begin(), perms.end(), sigma);
    ++counts[static_cast<std::size_t>(it - perms.begin())];
  }, cap);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (!perms[i].is_identity()) census.per_sigma.emplace_back(perms[i], counts[i]);
  }
  return census;
}

void for_each_forbidden(int n, int k, const TupleVisitor& visit, std::uint64_t cap) {
  for_each_black_forest_tuple(n, k, [&](const ForestTuple& t, bool forbidden) {
    if (forbidden) visit(t);
  }, cap);
}

EdgePolynomial signed_rhs_sum(int n, int k, std::uint64_t cap) {
  check_instance(n, k, cap);
  EdgePolynomial total;
  for (const auto& sigma : all_permutations(k)) {
    auto part = monomial_sum(enumerate_R_sigma(n, k, sigma));
    if (r_sigma_weight(sigma) > 0) {
      total += part;
    } else {
      total -= part;
    }
  }
  return total;
}

}  // namespace rhp
