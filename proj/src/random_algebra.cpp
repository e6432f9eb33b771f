#include "evoder/random_algebra.hpp"

#include <stdexcept>
#include <string>

#include "evoder/graph.hpp"
#include "evoder/twin.hpp"

namespace evoder {

RandomRationals::RandomRationals(std::uint64_t seed) : state_(seed) {}

// splitmix64: fixed output sequence regardless of standard library.
std::uint64_t RandomRationals::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t RandomRationals::below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

Rational RandomRationals::nonzero() {
  auto magnitude = static_cast<std::int64_t>(below(9)) + 1;
  const bool negative = below(2) == 1;
  const auto denominator = static_cast<std::int64_t>(below(4)) + 1;
  return Rational(negative ? -magnitude : magnitude, denominator);
}

namespace {

bool satisfies(const EvolutionAlgebra& algebra, const GenerationRequirements& require) {
  const DirectedGraph graph = associated_graph(algebra);
  if (require.non_degenerate) {
    for (int i = 0; i < graph.size(); ++i) {
      if (graph.descendants(i).empty()) return false;
    }
  }
  if (require.connected && !is_connected(graph)) return false;
  if (require.twin_free && !is_twin_free(twin_partition(graph))) return false;
  return true;
}

}  // namespace

EvolutionAlgebra generate_random_algebra(int n, const Rational& arrow_probability, std::uint64_t seed,
                                         const GenerationRequirements& require) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("dimension out of range");
  if (arrow_probability.sign() <= 0 || arrow_probability > Rational(1)) {
    throw std::invalid_argument("arrow probability must lie in (0, 1]");
  }
  // Bernoulli(p/q): draw below q and compare with p. Numerator and denominator
  // are small in practice; anything beyond 64 bits is rejected.
  const std::uint64_t p = std::stoull(arrow_probability.numerator_str());
  const std::uint64_t q = std::stoull(arrow_probability.denominator_str());

  RandomRationals rng(seed);
  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (rng.below(q) < p) m(i, k) = rng.nonzero();
      }
    }
    EvolutionAlgebra algebra(std::move(m));
    if (satisfies(algebra, require)) return algebra;
  }
  throw GenerationExhausted("no algebra of dimension " + std::to_string(n) + " with arrow probability " +
                            arrow_probability.str() + " met the requirements after " +
                            std::to_string(kMaxGenerationAttempts) + " attempts");
}

}  // namespace evoder
