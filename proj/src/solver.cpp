#include "evoder/solver.hpp"

#include <cassert>

namespace evoder {

std::string ConstraintOrigin::label() const {
  if (family == ConstraintFamily::Pair) {
    return "Eq1(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
  }
  return "Eq2(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

Rational ConstraintSystem::evaluate(std::size_t r, const DerivationMatrix& d) const {
  Rational sum;
  for (const auto& [c, x] : rows_[r].terms) sum += x * d(c / n_, c % n_);
  return sum;
}

namespace {

void add_term(std::vector<Rational>& dense, int column, const Rational& x) {
  if (!x.is_zero()) dense[static_cast<std::size_t>(column)] += x;
}

}  // namespace

ConstraintSystem assemble_constraints(const EvolutionAlgebra& algebra) {
  const int n = algebra.dimension();
  std::vector<ConstraintRow> rows;
  rows.reserve(static_cast<std::size_t>(n) * (n * (n - 1) / 2) + static_cast<std::size_t>(n) * n);

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        ConstraintRow row{{ConstraintFamily::Pair, i, j, k}, {}};
        if (!algebra.omega(j, k).is_zero()) row.terms.emplace_back(i * n + j, algebra.omega(j, k));
        if (!algebra.omega(i, k).is_zero()) row.terms.emplace_back(j * n + i, algebra.omega(i, k));
        rows.push_back(std::move(row));
      }
    }
  }

  std::vector<Rational> dense(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::fill(dense.begin(), dense.end(), Rational());
      for (int k = 0; k < n; ++k) add_term(dense, k * n + j, algebra.omega(i, k));
      add_term(dense, i * n + i, Rational(-2) * algebra.omega(i, j));
      rows.push_back(ConstraintRow{{ConstraintFamily::Diagonal, i, j, -1}, to_sparse(dense)});
    }
  }
  return ConstraintSystem(n, std::move(rows));
}

DerivationSpace nullspace(const ConstraintSystem& system) {
  const int n = system.dimension();
  ReducedEchelon echelon(system.unknown_count());
  for (const auto& row : system.rows()) {
    if (!row.terms.empty()) echelon.insert(row.terms);
  }

  DerivationSpace space;
  space.rank = echelon.rank();
  for (const auto& v : echelon.kernel_basis()) {
    DerivationMatrix d(n);
    for (const auto& [c, x] : v) d(c / n, c % n) = x;
    space.basis.push_back(std::move(d));
  }
  for (int f : echelon.free_columns()) space.free_unknowns.emplace_back(f / n, f % n);
  space.dimension = static_cast<int>(space.basis.size());
  assert(space.dimension == system.unknown_count() - space.rank);
  return space;
}

namespace {

// Coordinates of u * v for u, v given in the natural basis.
std::vector<Rational> product(const EvolutionAlgebra& algebra, const std::vector<Rational>& u,
                              const std::vector<Rational>& v) {
  const int n = algebra.dimension();
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Rational c = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] += c * algebra.omega(i, k);
  }
  return out;
}

std::vector<Rational> unit(int n, int i) {
  std::vector<Rational> e(static_cast<std::size_t>(n));
  e[static_cast<std::size_t>(i)] = Rational(1);
  return e;
}

// Image of u under d, where row i of d is d(e_i).
std::vector<Rational> apply_map(const DerivationMatrix& d, const std::vector<Rational>& u) {
  const int n = d.size();
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (u[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] += u[static_cast<std::size_t>(i)] * d(i, k);
  }
  return out;
}

}  // namespace

LeibnizCheck is_derivation(const EvolutionAlgebra& algebra, const DerivationMatrix& d) {
  const int n = algebra.dimension();
  if (d.size() != n) {
    throw ShapeMismatch("derivation candidate is " + std::to_string(d.size()) + "x" + std::to_string(d.size()) +
                        " but the algebra has dimension " + std::to_string(n));
  }
  std::vector<std::vector<Rational>> images;
  std::vector<std::vector<Rational>> basis;
  for (int i = 0; i < n; ++i) {
    basis.push_back(unit(n, i));
    images.push_back(apply_map(d, basis.back()));
  }

  // Same traversal order as assemble_constraints so the first violation agrees.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // e_i e_j = 0, so d(e_i e_j) = 0.
      const auto left = product(algebra, images[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
      const auto right = product(algebra, basis[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
      for (int k = 0; k < n; ++k) {
        Rational residual = left[static_cast<std::size_t>(k)] + right[static_cast<std::size_t>(k)];
        if (!residual.is_zero()) return {false, ConstraintOrigin{ConstraintFamily::Pair, i, j, k}, residual};
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    const auto square = product(algebra, basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(i)]);
    const auto lhs = apply_map(d, square);
    const auto half = product(algebra, basis[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      Rational residual = lhs[static_cast<std::size_t>(j)] - Rational(2) * half[static_cast<std::size_t>(j)];
      if (!residual.is_zero()) return {false, ConstraintOrigin{ConstraintFamily::Diagonal, i, j, -1}, residual};
    }
  }
  return {};
}

bool span_contains(const std::vector<DerivationMatrix>& basis, const DerivationMatrix& m) {
  ReducedEchelon echelon(m.size() * m.size());
  for (const auto& b : basis) {
    if (b.size() != m.size()) throw ShapeMismatch("basis element size differs from candidate");
    echelon.insert(to_sparse(b.flat()));
  }
  return echelon.contains(to_sparse(m.flat()));
}

}  // namespace evoder
