#pragma once

#include <cstdint>

#include "evoder/algebra.hpp"

namespace evoder {

struct GenerationRequirements {
  bool non_degenerate = false;
  bool connected = false;
  bool twin_free = false;
};

inline constexpr int kMaxGenerationAttempts = 10000;

/// Random structure matrix: each entry is an arrow with probability
/// `arrow_probability` (in (0, 1]); arrows get a nonzero value p/q with
/// p in [-9, 9] \ {0} and q in [1, 4]. Draws are rejected until every
/// requirement holds. Deterministic in (n, arrow_probability, seed) on every
/// platform. Throws GenerationExhausted after kMaxGenerationAttempts draws and
/// std::invalid_argument for bad arguments.
EvolutionAlgebra generate_random_algebra(int n, const Rational& arrow_probability, std::uint64_t seed,
                                         const GenerationRequirements& require = {});

/// Random nonzero rational of the form above, from a caller-owned stream.
class RandomRationals {
 public:
  explicit RandomRationals(std::uint64_t seed);

  Rational nonzero();
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

}  // namespace evoder
