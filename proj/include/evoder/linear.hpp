#pragma once

#include <utility>
#include <vector>

#include "evoder/rational.hpp"

namespace evoder {

/// (column, coefficient) pairs sorted by column with no zero coefficients.
using SparseVector = std::vector<std::pair<int, Rational>>;

SparseVector to_sparse(const std::vector<Rational>& dense);
std::vector<Rational> to_dense(const SparseVector& v, int columns);

/// Incrementally maintained reduced row echelon form over the rationals.
///
/// Each stored row has a 1 at its pivot column and zeros at every other
/// pivot column. The pivot of a new row is its last nonzero column, so the
/// free columns are the earliest ones. Because the
/// reduced echelon form of a row space is unique, the result does not depend on
/// the order rows are inserted.
class ReducedEchelon {
 public:
  explicit ReducedEchelon(int columns);

  int columns() const { return columns_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Adds a row to the space; returns true when the rank grew.
  bool insert(const SparseVector& row);

  /// Residual of `v` after elimination against the stored rows. Empty exactly
  /// when `v` lies in the row space.
  SparseVector reduce(const SparseVector& v) const;

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Pivot columns in increasing order.
  std::vector<int> pivot_columns() const;
  std::vector<int> free_columns() const;

  /// Kernel basis of the stored rows: one vector per free column (in increasing
  /// order), with 1 at that column and 0 at every other free column.
  std::vector<SparseVector> kernel_basis() const;

 private:
  int columns_;
  std::vector<SparseVector> rows_;
  std::vector<int> row_of_pivot_;
};

}  // namespace evoder
