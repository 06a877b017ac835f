#pragma once

// Exhaustive property checks of the involutions and the bijection at small
// (n, k). Each check stops at the first counterexample and reports it.

#include <cstdint>
#include <string>
#include <vector>

#include "rhp/enumeration.hpp"
#include "rhp/involution.hpp"

namespace rhp {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string detail;  // first failure, if any
};

// phi0 on S1: fixes S0, otherwise an involution that flips the sign and stays in S1.
CheckResult check_phi0(int n, int k, std::uint64_t cap = kDefaultEnumerationCap);
// phi2 on S2, likewise with S3 as the fixed set.
CheckResult check_phi2(int n, int k, std::uint64_t cap = kDefaultEnumerationCap);
// phi1 on S1 and S2: a weight-preserving involution that reverses the sign in
// S1 - S2 and lands in S1 or S2. Each pairwise step touches only its pair,
// keeps the red cycle parity exactly when it ends in A, and replays from the
// trace.
CheckResult check_phi1(int n, int k, std::uint64_t cap = kDefaultEnumerationCap);
// forward is a bijection S0 -> S3, backward inverts it, weights are kept.
CheckResult check_bijection(int n, int k, const DriverOptions& options = {},
                            std::uint64_t cap = kDefaultEnumerationCap);

std::vector<CheckResult> involution_suite(int n, int k, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace rhp
