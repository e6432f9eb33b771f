#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evoder/algebra.hpp"
#include "evoder/linear.hpp"

namespace evoder {

/// Which family of derivation conditions a constraint row comes from.
///   Pair:     omega(j,k) d(i,j) + omega(i,k) d(j,i) = 0      for i < j and every k
///   Diagonal: sum_k omega(i,k) d(k,j) - 2 omega(i,j) d(i,i) = 0   for every i, j
enum class ConstraintFamily { Pair, Diagonal };

/// Zero-based indices of the relation that produced a row; k is -1 for Diagonal rows.
struct ConstraintOrigin {
  ConstraintFamily family = ConstraintFamily::Pair;
  int i = 0;
  int j = 0;
  int k = -1;

  /// "Eq1(i,j,k)" or "Eq2(i,j)", 1-based.
  std::string label() const;

  friend bool operator==(const ConstraintOrigin&, const ConstraintOrigin&) = default;
};

struct ConstraintRow {
  ConstraintOrigin origin;
  SparseVector terms;  // over unknowns d(i,j) at column i*n + j
};

/// Linear system whose solutions are exactly the derivations. Unknowns are the
/// entries d(i,j) in row-major order. Rows are kept sparse; every Pair row has
/// at most two terms.
class ConstraintSystem {
 public:
  ConstraintSystem(int n, std::vector<ConstraintRow> rows) : n_(n), rows_(std::move(rows)) {}

  int dimension() const { return n_; }
  int unknown_count() const { return n_ * n_; }
  int unknown(int i, int j) const { return i * n_ + j; }
  const std::vector<ConstraintRow>& rows() const { return rows_; }

  std::vector<Rational> dense_row(std::size_t r) const { return to_dense(rows_[r].terms, unknown_count()); }

  /// Value of row r at the matrix d.
  Rational evaluate(std::size_t r, const DerivationMatrix& d) const;

 private:
  int n_;
  std::vector<ConstraintRow> rows_;
};

/// n * C(n,2) Pair rows ordered by (i, j, k) with i < j, then n^2 Diagonal rows
/// ordered by (i, j).
ConstraintSystem assemble_constraints(const EvolutionAlgebra& algebra);

struct DerivationSpace {
  int dimension = 0;
  int rank = 0;
  /// Zero-based (i, j) of each free unknown, in the order of `basis`.
  std::vector<std::pair<int, int>> free_unknowns;
  /// Element t has 1 at free_unknowns[t] and 0 at every other free unknown.
  std::vector<DerivationMatrix> basis;
};

/// Exact kernel of the system by reduced row echelon elimination.
DerivationSpace nullspace(const ConstraintSystem& system);

inline DerivationSpace derivation_space(const EvolutionAlgebra& algebra) {
  return nullspace(assemble_constraints(algebra));
}

struct LeibnizCheck {
  bool holds = true;
  /// First violated relation in assemble_constraints order, with its residual.
  std::optional<ConstraintOrigin> first_violation;
  Rational residual;
};

/// Checks d(e_i e_j) = d(e_i) e_j + e_i d(e_j) on every pair of basis vectors by
/// multiplying in the algebra. Throws ShapeMismatch when sizes differ.
LeibnizCheck is_derivation(const EvolutionAlgebra& algebra, const DerivationMatrix& d);

/// Whether `m` is a linear combination of `basis`, decided by exact elimination.
bool span_contains(const std::vector<DerivationMatrix>& basis, const DerivationMatrix& m);

}  // namespace evoder
