#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rhp/errors.hpp"
#include "rhp/forest.hpp"

namespace rhp {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// A square matrix whose rows and columns carry node labels, so minors can be
// taken by label as in M[U, W].
template <typename Scalar>
struct SquareMatrix {
  DenseMatrix<Scalar> entries;
  std::vector<NodeId> row_labels;
  std::vector<NodeId> col_labels;

  SquareMatrix() = default;

  // Labels default to 1..dim.
  explicit SquareMatrix(DenseMatrix<Scalar> m) : entries(std::move(m)) {
    if (entries.rows() != entries.cols()) throw SizeMismatch("matrix is not square");
    row_labels.resize(static_cast<std::size_t>(entries.rows()));
    std::iota(row_labels.begin(), row_labels.end(), 1);
    col_labels = row_labels;
  }

  SquareMatrix(DenseMatrix<Scalar> m, std::vector<NodeId> rows, std::vector<NodeId> cols)
      : entries(std::move(m)), row_labels(std::move(rows)), col_labels(std::move(cols)) {
    if (entries.rows() != entries.cols()) throw SizeMismatch("matrix is not square");
    if (static_cast<Eigen::Index>(row_labels.size()) != entries.rows() ||
        static_cast<Eigen::Index>(col_labels.size()) != entries.cols()) {
      throw SizeMismatch("label count does not match dimension");
    }
  }

  Eigen::Index dim() const { return entries.rows(); }
  const Scalar& operator()(Eigen::Index r, Eigen::Index c) const { return entries(r, c); }
};

namespace detail {

inline std::vector<Eigen::Index> positions_of(const std::vector<NodeId>& labels,
                                              std::vector<NodeId> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Eigen::Index> pos;
  pos.reserve(keep.size());
  for (NodeId label : keep) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw LabelMismatch("label " + std::to_string(label) + " not present");
    pos.push_back(static_cast<Eigen::Index>(it - labels.begin()));
  }
  // keep label order ascending even when the matrix labels are not sorted
  std::sort(pos.begin(), pos.end(), [&](Eigen::Index a, Eigen::Index b) {
    return labels[static_cast<std::size_t>(a)] < labels[static_cast<std::size_t>(b)];
  });
  return pos;
}

}  // namespace detail

// M[keep_rows, keep_cols], labels ascending.
template <typename Scalar>
SquareMatrix<Scalar> minor(const SquareMatrix<Scalar>& m, const std::vector<NodeId>& keep_rows,
                           const std::vector<NodeId>& keep_cols) {
  const auto rows = detail::positions_of(m.row_labels, keep_rows);
  const auto cols = detail::positions_of(m.col_labels, keep_cols);
  if (rows.size() != cols.size()) throw SizeMismatch("row and column sets differ in size");
  DenseMatrix<Scalar> sub = m.entries(rows, cols);
  std::vector<NodeId> rl, cl;
  for (auto r : rows) rl.push_back(m.row_labels[static_cast<std::size_t>(r)]);
  for (auto c : cols) cl.push_back(m.col_labels[static_cast<std::size_t>(c)]);
  return SquareMatrix<Scalar>(std::move(sub), std::move(rl), std::move(cl));
}

}  // namespace rhp
