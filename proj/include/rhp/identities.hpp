#pragma once

// Laplacians of the complete digraph and the determinant identities checked
// against forest enumeration.

#include <vector>

#include "rhp/determinant.hpp"
#include "rhp/edge_polynomial.hpp"
#include "rhp/enumeration.hpp"
#include "rhp/permutation.hpp"
#include "rhp/square_matrix.hpp"

namespace rhp {

using PolyMatrix = SquareMatrix<EdgePolynomial>;
using IntMatrix = SquareMatrix<BigInt>;

// (n+1)x(n+1), labels 0..n: off-diagonal -a_ij, diagonal sum_{k != i} a_ik.
PolyMatrix laplacian(int n);

// dim x dim matrix of independent indeterminates m_ij (stored as variable
// (i, j)), labels 1..dim.
PolyMatrix symbolic_matrix(int dim);

template <typename Scalar>
struct SigmaTerm {
  PermutationK sigma;
  int sign = +1;
  Scalar product;  // sign already applied
};

template <typename Scalar>
struct DodgsonMuirSides {
  Scalar lhs;
  Scalar rhs;
  std::vector<SigmaTerm<Scalar>> per_sigma;
};

// det(M) * det(M[K,K])^(k-1) against
// sum_sigma (-1)^inv(sigma) prod_i det(M[{i} u K, {sigma(i)} u K]),
// where K is the last dim-k rows/columns and i, sigma(i) index the first k.
template <typename Scalar>
DodgsonMuirSides<Scalar> dodgson_muir_sides(const SquareMatrix<Scalar>& m, int k) {
  const int n = static_cast<int>(m.dim());
  if (k < 1 || k > n) throw SizeMismatch("need 1 <= k <= dim");
  const auto cap = default_det_cap<Scalar>();
  std::vector<NodeId> rows_tail, cols_tail;
  for (int p = k; p < n; ++p) {
    rows_tail.push_back(m.row_labels[static_cast<std::size_t>(p)]);
    cols_tail.push_back(m.col_labels[static_cast<std::size_t>(p)]);
  }

  DodgsonMuirSides<Scalar> out;
  const Scalar tail_det = det_exact(minor(m, rows_tail, cols_tail), cap);
  Scalar power(1);
  for (int e = 0; e < k - 1; ++e) power = power * tail_det;
  out.lhs = det_exact(m, cap) * power;

  // bordered minors depend only on (i, sigma(i))
  std::vector<std::vector<Scalar>> bordered(static_cast<std::size_t>(k),
                                            std::vector<Scalar>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      auto rows = rows_tail;
      auto cols = cols_tail;
      rows.push_back(m.row_labels[static_cast<std::size_t>(i)]);
      cols.push_back(m.col_labels[static_cast<std::size_t>(j)]);
      bordered[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          det_exact(minor(m, rows, cols), cap);
    }
  }

  out.rhs = Scalar(0);
  for (const auto& sigma : all_permutations(k)) {
    SigmaTerm<Scalar> term{sigma, inversion_sign(sigma), Scalar(1)};
    for (int i = 1; i <= k; ++i) {
      term.product = term.product *
                     bordered[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(sigma(i) - 1)];
    }
    if (term.sign < 0) term.product = Scalar(0) - term.product;
    out.rhs = out.rhs + term.product;
    out.per_sigma.push_back(std::move(term));
  }
  return out;
}

// Both sides for M = A with row and column 0 removed.
DodgsonMuirSides<EdgePolynomial> gendodgson_sides(int n, int k);

struct MatrixTreeSides {
  EdgePolynomial determinant;
  EdgePolynomial forest_sum;
};

MatrixTreeSides matrix_tree_sides(int n, const std::vector<NodeId>& roots);

// det of the Laplacian with the root rows/columns removed equals the sum of
// forest monomials over forests rooted exactly at `roots`.
bool matrix_tree_check(int n, const std::vector<NodeId>& roots);

// Signed R^sigma sum equals the S3 monomial sum.
bool cancellation_check(int n, int k, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace rhp
