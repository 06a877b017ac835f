#include "rhp/identities.hpp"

namespace rhp {

PolyMatrix laplacian(int n) {
  if (n < 1) throw SizeMismatch("n must be >= 1");
  const Eigen::Index dim = n + 1;
  DenseMatrix<EdgePolynomial> a(dim, dim);
  for (NodeId i = 0; i <= n; ++i) {
    EdgePolynomial diag;
    for (NodeId j = 0; j <= n; ++j) {
      if (i == j) continue;
      const auto v = EdgePolynomial::variable(i, j);
      a(i, j) = -v;
      diag += v;
    }
    a(i, i) = diag;
  }
  std::vector<NodeId> labels(static_cast<std::size_t>(dim));
  for (NodeId i = 0; i <= n; ++i) labels[static_cast<std::size_t>(i)] = i;
  return PolyMatrix(std::move(a), labels, labels);
}

PolyMatrix symbolic_matrix(int dim) {
  DenseMatrix<EdgePolynomial> a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = EdgePolynomial::variable(i + 1, j + 1);
  }
  return PolyMatrix(std::move(a));
}

DodgsonMuirSides<EdgePolynomial> gendodgson_sides(int n, int k) {
  if (k < 1 || k > n) throw SizeMismatch("need 1 <= k <= n");
  std::vector<NodeId> inner;
  for (NodeId i = 1; i <= n; ++i) inner.push_back(i);
  return dodgson_muir_sides(minor(laplacian(n), inner, inner), k);
}

MatrixTreeSides matrix_tree_sides(int n, const std::vector<NodeId>& roots) {
  if (roots.empty()) throw InvalidSpec("roots must be nonempty");
  std::vector<bool> is_root(static_cast<std::size_t>(n) + 1, false);
  for (NodeId r : roots) {
    if (r < 0 || r > n) throw InvalidSpec("root out of range");
    is_root[static_cast<std::size_t>(r)] = true;
  }
  std::vector<NodeId> keep;
  for (NodeId v = 0; v <= n; ++v) {
    if (!is_root[static_cast<std::size_t>(v)]) keep.push_back(v);
  }
  MatrixTreeSides sides;
  sides.determinant = det_exact(minor(laplacian(n), keep, keep));
  for (const auto& f : enumerate_forests(n, RootedForestSpec{roots, std::nullopt})) {
    Monomial m;
    for (const auto& e : f.edges()) m.emplace_back(e.src, e.dst);
    sides.forest_sum += EdgePolynomial::monomial(std::move(m));
  }
  return sides;
}

bool matrix_tree_check(int n, const std::vector<NodeId>& roots) {
  const auto sides = matrix_tree_sides(n, roots);
  return sides.determinant == sides.forest_sum;
}

bool cancellation_check(int n, int k, std::uint64_t cap) {
  return signed_rhs_sum(n, k, cap) == monomial_sum(enumerate_set(n, k, SetName::S3, cap));
}

}  // namespace rhp
