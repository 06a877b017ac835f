#pragma once

// Exact determinants. Integer matrices use Bareiss fraction-free
// elimination; polynomial matrices use Laplace expansion memoised on the set
// of columns already consumed.

#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "rhp/big_int.hpp"
#include "rhp/edge_polynomial.hpp"
#include "rhp/square_matrix.hpp"

namespace rhp {

inline constexpr int kIntegerDetCap = 12;
inline constexpr int kSymbolicDetCap = 8;

template <typename Scalar>
constexpr int default_det_cap() {
  return std::is_same_v<Scalar, BigInt> ? kIntegerDetCap : kSymbolicDetCap;
}

// Works over any commutative ring; O(2^n * n) ring operations.
template <typename Scalar>
Scalar laplace_det(const DenseMatrix<Scalar>& a) {
  const int n = static_cast<int>(a.rows());
  if (n == 0) return Scalar(1);
  const std::uint32_t full = (1u << n) - 1u;
  // memo[mask]: determinant of rows popcount(mask).. against the columns not in mask
  std::vector<Scalar> memo(std::size_t{1} << n);
  memo[full] = Scalar(1);
  // masks with more bits are always processed first
  for (int used = n - 1; used >= 0; --used) {
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      if (__builtin_popcount(mask) != used) continue;
      Scalar total(0);
      int free_index = 0;
      for (int c = 0; c < n; ++c) {
        if (mask & (1u << c)) continue;
        const auto& entry = a(used, c);
        const auto next = mask | (1u << c);
        if (!(entry == Scalar(0)) && !(memo[next] == Scalar(0))) {
          Scalar term = entry * memo[next];
          if (free_index % 2 == 0) {
            total += term;
          } else {
            total -= term;
          }
        }
        ++free_index;
      }
      memo[mask] = std::move(total);
    }
  }
  return memo[0];
}

// Fraction-free Gaussian elimination with row pivoting.
inline BigInt bareiss_det(DenseMatrix<BigInt> a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign > 0 ? BigInt(a(n - 1, n - 1)) : BigInt(-a(n - 1, n - 1));
}

template <typename Scalar>
Scalar det_exact(const SquareMatrix<Scalar>& m, int cap = default_det_cap<Scalar>()) {
  if (m.dim() > cap) {
    throw DimTooLarge("dimension " + std::to_string(m.dim()) + " exceeds cap " + std::to_string(cap));
  }
  if constexpr (std::is_same_v<Scalar, BigInt>) {
    return bareiss_det(m.entries);
  } else {
    return laplace_det<Scalar>(m.entries);
  }
}

}  // namespace rhp
