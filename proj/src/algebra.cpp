#include "evoder/algebra.hpp"

#include <string>

namespace evoder {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedHeader:
      return "MalformedHeader";
    case ParseErrorKind::MalformedRational:
      return "MalformedRational";
    case ParseErrorKind::ShapeMismatch:
      return "ShapeMismatch";
    case ParseErrorKind::DimensionTooLarge:
      return "DimensionTooLarge";
  }
  return "ParseError";
}

EvolutionAlgebra::EvolutionAlgebra(RationalMatrix structure) : structure_(std::move(structure)) {
  if (structure_.size() < 1) throw ShapeMismatch("structure matrix must be at least 1x1");
  if (structure_.size() > kMaxDimension) {
    throw ParseError(ParseErrorKind::DimensionTooLarge,
                     "dimension " + std::to_string(structure_.size()) + " exceeds the limit of " +
                         std::to_string(kMaxDimension));
  }
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.size() != b.size()) throw ShapeMismatch("matrix sizes differ");
  const int n = a.size();
  RationalMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

DerivationMatrix lie_bracket(const DerivationMatrix& d1, const DerivationMatrix& d2) {
  if (d1.size() != d2.size()) throw ShapeMismatch("cannot bracket matrices of different sizes");
  // Rows hold images of basis vectors, so the matrix of d1 o d2 is d2 * d1.
  const RationalMatrix ab = multiply(d2, d1);
  const RationalMatrix ba = multiply(d1, d2);
  const int n = d1.size();
  DerivationMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = ab(i, j) - ba(i, j);
  }
  return out;
}

bool is_zero(const RationalMatrix& m) {
  for (const auto& x : m.flat()) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace evoder
