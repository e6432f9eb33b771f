#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "evoder/errors.hpp"
#include "evoder/rational.hpp"

namespace evoder {

/// Largest supported dimension.
inline constexpr int kMaxDimension = 64;

/// Dense square matrix, row-major, zero-based indexing.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n, const T& fill = T{}) : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}
  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : n_(static_cast<int>(rows.size())) {
    data_.reserve(static_cast<std::size_t>(n_) * n_);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n_) throw ShapeMismatch("matrix literal is not square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  int size() const { return n_; }

  T& operator()(int row, int col) { return data_[index(row, col)]; }
  const T& operator()(int row, int col) const { return data_[index(row, col)]; }

  const std::vector<T>& flat() const { return data_; }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) = default;

 private:
  std::size_t index(int row, int col) const { return static_cast<std::size_t>(row) * n_ + col; }

  int n_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = SquareMatrix<Rational>;

/// Zero-based (row, column) position in an n x n matrix.
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// An evolution algebra given by its structure matrix relative to a fixed
/// natural basis: row i holds the coordinates of e_i^2.
class EvolutionAlgebra {
 public:
  /// Throws ShapeMismatch for an empty matrix and ParseError(DimensionTooLarge)
  /// beyond kMaxDimension.
  explicit EvolutionAlgebra(RationalMatrix structure);

  int dimension() const { return structure_.size(); }
  const Rational& omega(int i, int k) const { return structure_(i, k); }
  const RationalMatrix& structure() const { return structure_; }

  friend bool operator==(const EvolutionAlgebra&, const EvolutionAlgebra&) = default;

 private:
  RationalMatrix structure_;
};

/// Matrix of a linear map d with d(e_i) = sum_k d(i, k) e_k.
using DerivationMatrix = RationalMatrix;

/// Commutator d1 o d2 - d2 o d1 of the maps, in the row convention above.
/// Throws ShapeMismatch when the sizes differ.
DerivationMatrix lie_bracket(const DerivationMatrix& d1, const DerivationMatrix& d2);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

bool is_zero(const RationalMatrix& m);

}  // namespace evoder
