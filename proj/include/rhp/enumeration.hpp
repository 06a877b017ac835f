#pragma once

// Exhaustive generation of rooted forests, the signed sets S0..S3, and the
// permutation-indexed families R^sigma at small (n, k).

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rhp/edge_polynomial.hpp"
#include "rhp/forest.hpp"
#include "rhp/permutation.hpp"

namespace rhp {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct RootedForestSpec {
  std::vector<NodeId> roots;
  std::optional<std::pair<NodeId, NodeId>> required_meta_edge;
};

// All acyclic black functional graphs on {0..n} whose sinks are exactly
// spec.roots, in lexicographic edge-list order.
std::vector<FunctionalGraph> enumerate_forests(int n, const RootedForestSpec& spec);

// Number of uncoloured S1 shapes, saturating at UINT64_MAX.
std::uint64_t s1_shape_count(int n, int k);

void check_instance(int n, int k, std::uint64_t cap = kDefaultEnumerationCap);

using TupleVisitor = std::function<void(const ForestTuple&)>;

// Visits every element of the chosen set exactly once: shapes in
// lexicographic order, colourings by ascending cycle-subset bitmask.
void for_each_in_set(int n, int k, SetName which, const TupleVisitor& visit,
                     std::uint64_t cap = kDefaultEnumerationCap);

std::vector<ForestTuple> enumerate_set(int n, int k, SetName which,
                                       std::uint64_t cap = kDefaultEnumerationCap);

// Component i (graph index i-1) is a forest rooted at {0..k} \ {i}, with a
// meta-edge i -> sigma(i) whenever sigma(i) != i.
std::vector<ForestTuple> enumerate_R_sigma(int n, int k, const PermutationK& sigma);

EdgePolynomial monomial_of(const ForestTuple& tuple);

// Sum of weight monomials over a family of tuples.
EdgePolynomial monomial_sum(const std::vector<ForestTuple>& tuples);

// Weight carried by the R^sigma family in the expanded minor products:
// (-1)^inv(sigma) from the permutation and -1 from each off-diagonal minor.
int r_sigma_weight(const PermutationK& sigma);

// Permutation of 1..k sending each special node on a forbidden meta-cycle to
// its successor on that cycle and fixing the rest.
PermutationK meta_cycle_permutation(const ForestTuple& tuple);

// All-black S2-shaped tuples whose graphs are forests, split into those with
// a forbidden meta-cycle (grouped by meta_cycle_permutation) and the rest.
struct ForbiddenCensus {
  std::uint64_t forest_tuples = 0;
  std::uint64_t forbidden = 0;
  std::vector<std::pair<PermutationK, std::uint64_t>> per_sigma;  // lexicographic, non-identity only
};

ForbiddenCensus forbidden_census(int n, int k, std::uint64_t cap = kDefaultEnumerationCap);
void for_each_forbidden(int n, int k, const TupleVisitor& visit,
                        std::uint64_t cap = kDefaultEnumerationCap);

EdgePolynomial signed_rhs_sum(int n, int k, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace rhp
