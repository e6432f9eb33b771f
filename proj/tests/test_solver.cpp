#include <catch2/catch_amalgamated.hpp>

#include "evoder/random_algebra.hpp"
#include "evoder/solver.hpp"
#include "evoder/twin.hpp"
#include "support.hpp"

using namespace evoder;
using evoder::test::alg;
using evoder::test::mat;

namespace {

// Rank by plain dense Gaussian elimination, written independently of the
// sparse echelon used by the solver.
int dense_rank(std::vector<std::vector<Rational>> rows, int columns) {
  int rank = 0;
  for (int c = 0; c < columns && rank < static_cast<int>(rows.size()); ++c) {
    int p = rank;
    while (p < static_cast<int>(rows.size()) && rows[p][c].is_zero()) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (int x = c; x < columns; ++x) rows[r][x] -= f * rows[rank][x];
    }
    ++rank;
  }
  return rank;
}

int oracle_rank(const EvolutionAlgebra& a) {
  const auto sys = assemble_constraints(a);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t r = 0; r < sys.rows().size(); ++r) rows.push_back(sys.dense_row(r));
  return dense_rank(rows, sys.unknown_count());
}

}  // namespace

TEST_CASE("constraint counts and order") {
  const auto a = alg({{"2", "1", "0"}, {"-1", "0", "3"}, {"0", "0", "3"}});
  const auto sys = assemble_constraints(a);
  REQUIRE(sys.rows().size() == 18);
  int pair = 0;
  for (const auto& row : sys.rows()) pair += row.origin.family == ConstraintFamily::Pair;
  CHECK(pair == 9);
  CHECK(sys.rows()[0].origin.label() == "Eq1(1,2,1)");
  CHECK(sys.rows()[8].origin.label() == "Eq1(2,3,3)");
  CHECK(sys.rows()[9].origin.label() == "Eq2(1,1)");
  CHECK(sys.rows()[17].origin.label() == "Eq2(3,3)");
  CHECK(sys.unknown_count() == 9);
  for (int n = 1; n <= 6; ++n) {
    const auto s = assemble_constraints(EvolutionAlgebra(RationalMatrix(n)));
    CHECK(static_cast<int>(s.rows().size()) == n * (n * (n - 1) / 2) + n * n);
  }
}

TEST_CASE("one-dimensional algebra") {
  const auto sys = assemble_constraints(alg({{"3/2"}}));
  REQUIRE(sys.rows().size() == 1);
  CHECK(sys.dense_row(0) == std::vector<Rational>{Rational(-3, 2)});
  CHECK(derivation_space(alg({{"3/2"}})).dimension == 0);
  CHECK(derivation_space(alg({{"0"}})).dimension == 1);
}

TEST_CASE("derivation spaces of worked examples") {
  const auto ex1 = derivation_space(alg({{"2", "1", "0"}, {"-1", "0", "3"}, {"0", "0", "3"}}));
  CHECK(ex1.dimension == 0);
  CHECK(ex1.rank == 9);
  CHECK(ex1.basis.empty());

  const auto t7 = derivation_space(alg({{"0", "0", "1"}, {"0", "0", "-1"}, {"1", "1", "0"}}));
  REQUIRE(t7.dimension == 1);
  CHECK(t7.basis[0] == mat({{"1", "3", "0"}, {"3", "1", "0"}, {"0", "0", "2"}}));
  CHECK(t7.free_unknowns == std::vector<std::pair<int, int>>{{0, 0}});

  const auto g = derivation_space(alg({{"1/2", "-1/4", "0"}, {"-2", "1", "0"}, {"2", "1", "0"}}));
  REQUIRE(g.dimension == 1);
  CHECK(g.basis[0] == mat({{"1", "-1/2", "0"}, {"-2", "1", "0"}, {"0", "0", "0"}}));

  const auto four = derivation_space(
      alg({{"1", "-1", "1", "0"}, {"1", "1", "-1", "0"}, {"1", "1", "-1", "0"}, {"-1", "-1", "1", "0"}}));
  REQUIRE(four.dimension == 1);
  CHECK(four.basis[0] ==
        mat({{"0", "0", "0", "0"}, {"0", "0", "0", "1"}, {"0", "0", "0", "1"}, {"0", "1", "1", "0"}}));

  const auto wheel = derivation_space(alg({{"1", "2", "0", "1", "-1"},
                                           {"-3", "0", "3", "0", "2"},
                                           {"0", "1", "0", "1", "-3"},
                                           {"1", "0", "-2", "1", "1"},
                                           {"-1", "1", "2", "-5", "0"}}));
  CHECK(wheel.dimension == 0);
  CHECK(derivation_space(alg({{"0", "0", "1"}, {"0", "0", "1"}, {"1", "1", "0"}})).dimension == 0);
}

TEST_CASE("Leibniz check") {
  const auto a = alg({{"0", "0", "1"}, {"0", "0", "-1"}, {"1", "1", "0"}});
  CHECK(is_derivation(a, mat({{"1", "3", "0"}, {"3", "1", "0"}, {"0", "0", "2"}})).holds);
  CHECK(is_derivation(a, RationalMatrix(3)).holds);
  const auto bad = is_derivation(alg({{"1"}}), mat({{"1"}}));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.first_violation.has_value());
  CHECK(bad.first_violation->label() == "Eq2(1,1)");
  CHECK(bad.residual == Rational(-1));
  CHECK_THROWS_AS(is_derivation(a, RationalMatrix(2)), ShapeMismatch);
  const auto off = is_derivation(a, mat({{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}));
  CHECK_FALSE(off.holds);
}

TEST_CASE("Leibniz check agrees with the constraint rows") {
  RandomRationals rng(77);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const auto a = generate_random_algebra(n, Rational(1, 2), seed);
    const auto sys = assemble_constraints(a);
    RationalMatrix d(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (rng.below(3) == 0) d(i, j) = rng.nonzero();
      }
    }
    std::optional<ConstraintOrigin> first;
    Rational residual;
    for (std::size_t r = 0; r < sys.rows().size() && !first; ++r) {
      Rational v = sys.evaluate(r, d);
      if (!v.is_zero()) {
        first = sys.rows()[r].origin;
        residual = v;
      }
    }
    const auto check = is_derivation(a, d);
    CHECK(check.holds == !first.has_value());
    if (first) {
      REQUIRE(check.first_violation.has_value());
      CHECK(*check.first_violation == *first);
      CHECK(check.residual == residual);
    }
  }
}

TEST_CASE("Lie bracket") {
  const auto d1 = mat({{"1", "2"}, {"0", "3"}});
  const auto d2 = mat({{"0", "1"}, {"1", "0"}});
  CHECK(is_zero(lie_bracket(d1, d1)));
  const auto b12 = lie_bracket(d1, d2);
  const auto b21 = lie_bracket(d2, d1);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) CHECK(b12(i, j) == -b21(i, j));
  }
  CHECK_THROWS_AS(lie_bracket(d1, RationalMatrix(3)), ShapeMismatch);
  CHECK(span_contains({d1, d2}, b12) == span_contains({d1, d2}, b21));
  CHECK(span_contains({d1}, mat({{"2", "4"}, {"0", "6"}})));
  CHECK_FALSE(span_contains({d1}, d2));
  CHECK(span_contains({}, RationalMatrix(2)));
}

TEST_CASE("solver properties on random algebras") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 240; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const auto a = generate_random_algebra(n, Rational(static_cast<std::int64_t>(1 + seed % 3), 4), seed,
                                           {.non_degenerate = (seed % 4 != 0)});
    const auto space = derivation_space(a);
    INFO("seed " << seed);
    CHECK(space.dimension == n * n - space.rank);
    if (n <= 4) CHECK(space.rank == oracle_rank(a));
    for (const auto& d : space.basis) CHECK(is_derivation(a, d).holds);
    // Canonical form: 1 at its own free slot, 0 at the other free slots.
    for (std::size_t b = 0; b < space.basis.size(); ++b) {
      for (std::size_t f = 0; f < space.free_unknowns.size(); ++f) {
        const auto [i, j] = space.free_unknowns[f];
        CHECK(space.basis[b](i, j) == Rational(b == f ? 1 : 0));
      }
    }
    for (const auto& x : space.basis) {
      for (const auto& y : space.basis) CHECK(span_contains(space.basis, lie_bracket(x, y)));
    }
    // Scaling the structure matrix keeps the dimension.
    RationalMatrix scaled(n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) scaled(i, k) = a.omega(i, k) * Rational(-7, 3);
    }
    CHECK(derivation_space(EvolutionAlgebra(scaled)).dimension == space.dimension);
    ++checked;
  }
  CHECK(checked == 240);
}

TEST_CASE("random generator") {
  const auto a = generate_random_algebra(3, Rational(1, 2), 42);
  CHECK(a == generate_random_algebra(3, Rational(1, 2), 42));
  bool differs = false;
  for (std::uint64_t s = 43; s < 50; ++s) differs = differs || !(a == generate_random_algebra(3, Rational(1, 2), s));
  CHECK(differs);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto nd = generate_random_algebra(4, Rational(1, 3), seed, {.non_degenerate = true});
    const auto g = associated_graph(nd);
    CHECK(graph_properties(nd, g).non_degenerate);
    const auto all = generate_random_algebra(4, Rational(1, 2), seed,
                                             {.non_degenerate = true, .connected = true, .twin_free = true});
    const auto ga = associated_graph(all);
    const auto props = graph_properties(all, ga);
    CHECK(props.non_degenerate);
    CHECK(props.connected);
    CHECK(is_twin_free(twin_partition(ga)));
    for (int i = 0; i < 4; ++i) {
      for (int k = 0; k < 4; ++k) {
        const Rational& w = all.omega(i, k);
        if (w.is_zero()) continue;
        const auto num = std::stol(w.numerator_str());
        const auto den = std::stol(w.denominator_str());
        CHECK(num != 0);
        CHECK(std::abs(num) <= 9);
        CHECK(den >= 1);
        CHECK(den <= 4);
      }
    }
  }
  // With every entry an arrow, all rows share one descendant set.
  CHECK_THROWS_AS(generate_random_algebra(3, Rational(1), 1, {.twin_free = true}), GenerationExhausted);
  CHECK_THROWS_AS(generate_random_algebra(0, Rational(1, 2), 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_random_algebra(3, Rational(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_random_algebra(3, Rational(3, 2), 1), std::invalid_argument);
}
