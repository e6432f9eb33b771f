#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "evoder/algebra.hpp"
#include "evoder/rational.hpp"

namespace evoder::test {

inline Rational q(const std::string& text) {
  auto r = Rational::parse(text);
  if (!r) throw std::invalid_argument("bad rational literal " + text);
  return *r;
}

/// Matrix from rows of rational literals.
inline RationalMatrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  RationalMatrix m(static_cast<int>(rows.size()));
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m.size()) throw std::invalid_argument("matrix literal is not square");
    int j = 0;
    for (const char* entry : row) m(i, j++) = q(entry);
    ++i;
  }
  return m;
}

inline EvolutionAlgebra alg(std::initializer_list<std::initializer_list<const char*>> rows) {
  return EvolutionAlgebra(mat(rows));
}

inline std::string corpus_path(const std::string& name) { return std::string(EVODER_CORPUS_DIR) + "/" + name; }

/// Relabels vertices: vertex v of `a` becomes perm[v].
inline EvolutionAlgebra relabel(const EvolutionAlgebra& a, const std::vector<int>& perm) {
  RationalMatrix m(a.dimension());
  for (int i = 0; i < a.dimension(); ++i) {
    for (int k = 0; k < a.dimension(); ++k) m(perm[i], perm[k]) = a.omega(i, k);
  }
  return EvolutionAlgebra(std::move(m));
}

}  // namespace evoder::test
