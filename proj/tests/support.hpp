#pragma once

// Independent oracles and fixture helpers shared by the test executables.

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rhp/big_int.hpp"
#include "rhp/forest.hpp"
#include "rhp/square_matrix.hpp"
#include "rhp/tuple_io.hpp"

namespace rhp::testing {

inline std::string fixture(const std::string& name) { return std::string(RHP_FIXTURE_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// The worked example's states, in the order they are drawn.
inline std::vector<ForestTuple> walkthrough_states() {
  std::vector<ForestTuple> out;
  for (const auto& j : nlohmann::json::parse(slurp(fixture("walkthrough_states.json")))) {
    out.push_back(tuple_from_json(j));
  }
  return out;
}

// Leibniz expansion over all permutations.
template <typename Scalar>
Scalar leibniz_det(const DenseMatrix<Scalar>& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  Scalar total(0);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
    Scalar term(1);
    for (int i = 0; i < n; ++i) term = term * m(i, p[static_cast<std::size_t>(i)]);
    if (inv % 2) {
      total = total - term;
    } else {
      total = total + term;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Node sets of the cycles of one functional graph: v lies on a cycle iff
// following out-edges from v returns to v.
inline std::set<std::set<NodeId>> brute_cycles(const FunctionalGraph& g) {
  std::set<std::set<NodeId>> out;
  for (NodeId v = 0; v <= g.n(); ++v) {
    std::set<NodeId> seen;
    NodeId cur = v;
    bool back = false;
    for (int step = 0; step <= g.n() + 1 && g.has_out(cur); ++step) {
      seen.insert(cur);
      cur = g.out(cur)->dst;
      if (cur == v) {
        back = true;
        break;
      }
    }
    if (back) out.insert(seen);
  }
  return out;
}

inline BigInt ipow(BigInt b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Rooted forests on N labelled nodes with a fixed set of r roots: r N^(N-r-1).
inline BigInt forests_with_roots(int nodes, int roots) {
  if (roots == nodes) return 1;
  return BigInt(roots) * ipow(nodes, nodes - roots - 1);
}

// |S0|: a spanning tree rooted at 0 times k-1 forests rooted at {0..k}.
inline BigInt s0_count(int n, int k) {
  return forests_with_roots(n + 1, 1) * ipow(forests_with_roots(n + 1, k + 1), k - 1);
}

}  // namespace rhp::testing
