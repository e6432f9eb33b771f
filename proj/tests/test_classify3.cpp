#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "evoder/analysis.hpp"
#include "evoder/classify3.hpp"
#include "evoder/random_algebra.hpp"
#include "evoder/twin.hpp"
#include "support.hpp"

using namespace evoder;
using evoder::test::alg;
using evoder::test::q;

namespace {

int pattern_mask(const Adjacency& a) {
  int mask = 0;
  for (int c = 0; c < 9; ++c) {
    if (a(c / 3, c % 3)) mask |= 1 << c;
  }
  return mask;
}

int canonical_mask(int mask) {
  std::array<int, 3> p{0, 1, 2};
  int best = 1 << 9;
  do {
    int m = 0;
    for (int c = 0; c < 9; ++c) {
      if (mask >> c & 1) m |= 1 << (p[c / 3] * 3 + p[c % 3]);
    }
    best = std::min(best, m);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

EvolutionAlgebra pattern_algebra(int mask) {
  RationalMatrix m(3);
  for (int c = 0; c < 9; ++c) {
    if (mask >> c & 1) m(c / 3, c % 3) = Rational(1);
  }
  return EvolutionAlgebra(std::move(m));
}

/// The matched template, placed by the assignment, reproduces the graph exactly.
bool match_is_valid(const EvolutionAlgebra& a, const TypeMatch& m) {
  const auto g = associated_graph(a);
  const auto roles = type_template(m.type).adjacency();
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      if ((roles(x, y) != 0) != g.has_arrow(m.assignment[x], m.assignment[y])) return false;
    }
  }
  return true;
}

RoleAssignment permutation_from(RandomRationals& rng) {
  RoleAssignment p{0, 1, 2};
  for (int i = 2; i > 0; --i) std::swap(p[i], p[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return p;
}

}  // namespace

TEST_CASE("type table has 23 records numbered in order") {
  const auto& table = type_table();
  REQUIRE(table.size() == 23);
  for (std::size_t t = 0; t < table.size(); ++t) CHECK(table[t].id == static_cast<int>(t) + 1);
  CHECK(type_template(13).id == 13);
}

TEST_CASE("zero types and parameter counts") {
  const std::set<int> zero_types{2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 14, 15, 16, 17, 18, 20, 21, 22};
  for (const auto& t : type_table()) {
    INFO("type " << t.id);
    CHECK(t.is_zero_type() == (zero_types.count(t.id) > 0));
    if (t.is_zero_type()) CHECK(t.parameter_count() == 0);
  }
  CHECK(type_template(1).parameter_count() == 1);
  CHECK(type_template(7).parameter_count() == 1);
  CHECK(type_template(13).parameter_count() == 2);
  CHECK(type_template(19).parameter_count() == 1);
  CHECK(type_template(23).parameter_count() == 2);
}

TEST_CASE("template twin and descendant columns agree with their graphs") {
  for (const auto& t : type_table()) {
    INFO("type " << t.id);
    const DirectedGraph g(t.adjacency());
    CHECK(g.arrow_count() == static_cast<int>(t.arrows.size()));
    const auto partition = twin_partition(g);
    CHECK_FALSE(is_twin_free(partition));
    const auto& cls = partition.classes()[static_cast<std::size_t>(partition.class_of(t.twin_class.front()))];
    CHECK(cls.members == t.twin_class);
    CHECK(cls.shared_descendants == t.shared_descendants);
    for (const auto& other : partition.classes()) CHECK(other.members.size() <= t.twin_class.size());

    RationalMatrix m(3);
    for (const Cell& a : t.arrows) m(a.row, a.col) = Rational(1);
    const EvolutionAlgebra a(std::move(m));
    const auto props = graph_properties(a, g);
    CHECK(props.non_degenerate);
    CHECK(props.connected);
  }
}

TEST_CASE("templates are pairwise non-isomorphic") {
  std::set<int> seen;
  for (const auto& t : type_table()) CHECK(seen.insert(canonical_mask(pattern_mask(t.adjacency()))).second);
}

TEST_CASE("table parser rejects malformed records") {
  CHECK_NOTHROW(parse_type_table("type 1\narrows ii\nzero ii\nend\n"));
  CHECK_THROWS_AS(parse_type_table("type 1\narrows iq\nend\n"), Error);
  CHECK_THROWS_AS(parse_type_table("type 1\narrows ii\n"), Error);
  CHECK_THROWS_AS(parse_type_table("arrows ii\nend\n"), Error);
  try {
    parse_type_table("type 1\nrelation d_ii 3\nend\n");
    FAIL("expected TableError");
  } catch (const Error& e) {
    CHECK(e.kind() == "TableError");
  }
}

TEST_CASE("expressions evaluate with role symbols") {
  auto values = [](const Symbol& s) {
    return s.kind == Symbol::Kind::StructureConstant ? Rational(s.row * 3 + s.col + 1) : Rational(10 + s.row);
  };
  CHECK(*Expression::parse("3*w_kj/w_ki*d_ii").evaluate(values) == Rational(3) * 8 / 7 * 10);
  CHECK(*Expression::parse("-(w_ki/w_ji)*d_jk").evaluate(values) == -(Rational(7) / 4) * 11);
  CHECK(*Expression::parse("1/2 - -d_kk").evaluate(values) == q("25/2"));
  CHECK(*Expression::parse("(1 + 2) * (3 - 5)").evaluate(values) == Rational(-6));
  CHECK_FALSE(Expression::parse("d_ii/(w_ii - 1)").evaluate(values).has_value());
  CHECK(Expression::parse("d_ij + 1").text() == "d_ij + 1");
  for (const char* bad : {"", "d_iq", "w_i", "1 +", "(1", "1)", "x_ii", "2 3"}) {
    INFO(bad);
    CHECK_THROWS_AS(Expression::parse(bad), Error);
  }
  CHECK(role_index('i') == 0);
  CHECK(role_index('k') == 2);
  CHECK(role_index('x') == -1);
  CHECK(role_letter(1) == 'j');
}

TEST_CASE("classification of small examples") {
  const auto t7 = classify(alg({{"0", "0", "1"}, {"0", "0", "-1"}, {"1", "1", "0"}}));
  CHECK(t7.verdict == MatchVerdict::Type);
  CHECK(t7.type == 7);
  CHECK(t7.assignment == RoleAssignment{0, 1, 2});
  CHECK(t7.arrows == 4);

  const auto t1 = classify(alg({{"1", "0", "0"}, {"1", "0", "0"}, {"1", "0", "0"}}));
  CHECK(t1.verdict == MatchVerdict::Type);
  CHECK(t1.type == 1);
  CHECK(t1.assignment == RoleAssignment{0, 1, 2});

  const auto free = classify(alg({{"2", "1", "0"}, {"-1", "0", "3"}, {"0", "0", "3"}}));
  CHECK(free.verdict == MatchVerdict::TwinFree);

  const auto four = classify(alg({{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}}));
  CHECK(four.verdict == MatchVerdict::NotApplicable);
  CHECK(four.reason == "n must be 3");

  const auto degenerate = classify(alg({{"1", "1", "0"}, {"0", "0", "0"}, {"1", "0", "0"}}));
  CHECK(degenerate.verdict == MatchVerdict::NotApplicable);
  CHECK(degenerate.reason == "algebra is degenerate");

  const auto split = classify(alg({{"1", "0", "0"}, {"0", "0", "1"}, {"0", "1", "0"}}));
  CHECK(split.verdict == MatchVerdict::NotApplicable);
  CHECK(split.reason == "graph is disconnected");

  CHECK(std::string(to_string(MatchVerdict::Type)) == "Type");
  CHECK(std::string(to_string(MatchVerdict::TwinFree)) == "TwinFree");
  CHECK(std::string(to_string(MatchVerdict::NotApplicable)) == "NotApplicable");
}

TEST_CASE("relabelled pattern picks the smallest assignment") {
  // Type 7 with roles i, j, k on vertices 2, 3, 1.
  const auto m = classify(alg({{"0", "1", "1"}, {"1", "0", "0"}, {"1", "0", "0"}}));
  REQUIRE(m.verdict == MatchVerdict::Type);
  CHECK(m.type == 7);
  CHECK(m.assignment == RoleAssignment{1, 2, 0});
}

TEST_CASE("patterns missing from the table") {
  // Centre with a loop, both leaves pointing back only to it.
  const auto centre = classify(alg({{"0", "0", "1"}, {"0", "0", "1"}, {"1", "1", "1"}}));
  CHECK(centre.verdict == MatchVerdict::NotApplicable);
  CHECK(centre.reason == "pattern outside table");
  // b loops and reaches everything, a loops, c points to a.
  const auto hub = classify(alg({{"1", "0", "0"}, {"1", "1", "1"}, {"1", "0", "0"}}));
  CHECK(hub.verdict == MatchVerdict::NotApplicable);
  CHECK(hub.reason == "pattern outside table");
}

TEST_CASE("every three-vertex pattern is classified") {
  const auto centre = alg({{"0", "0", "1"}, {"0", "0", "1"}, {"1", "1", "1"}});
  const auto hub = alg({{"1", "0", "0"}, {"1", "1", "1"}, {"1", "0", "0"}});
  const std::set<int> outside_classes{canonical_mask(pattern_mask(associated_graph(centre).adjacency())),
                                      canonical_mask(pattern_mask(associated_graph(hub).adjacency()))};
  std::set<int> types_hit;
  int outside = 0;
  for (int mask = 1; mask < 512; ++mask) {
    const auto a = pattern_algebra(mask);
    const auto g = associated_graph(a);
    const auto props = graph_properties(a, g);
    const bool twin_free = is_twin_free(twin_partition(g));
    const auto m = classify(a);
    INFO("mask " << mask);
    if (!props.non_degenerate || !props.connected) {
      CHECK(m.verdict == MatchVerdict::NotApplicable);
    } else if (twin_free) {
      CHECK(m.verdict == MatchVerdict::TwinFree);
    } else if (m.verdict == MatchVerdict::Type) {
      CHECK(match_is_valid(a, m));
      types_hit.insert(m.type);
    } else {
      CHECK(m.reason == "pattern outside table");
      CHECK(outside_classes.count(canonical_mask(mask)) == 1);
      ++outside;
    }
  }
  CHECK(types_hit.size() == 23);
  CHECK(outside == 9);
}

TEST_CASE("random three-dimensional algebras classify consistently") {
  int typed = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const auto a = generate_random_algebra(3, q("1/2"), seed, {true, true, false});
    const auto m = classify(a);
    INFO("seed " << seed);
    CHECK((m.verdict != MatchVerdict::NotApplicable || m.reason == "pattern outside table"));
    if (m.verdict != MatchVerdict::Type) continue;
    ++typed;
    CHECK(match_is_valid(a, m));

    RandomRationals rng(seed);
    const auto perm = permutation_from(rng);
    const auto b = test::relabel(a, {perm[0], perm[1], perm[2]});
    const auto mb = classify(b);
    REQUIRE(mb.verdict == MatchVerdict::Type);
    CHECK(mb.type == m.type);
    TypeMatch composed = m;
    for (int r = 0; r < 3; ++r) composed.assignment[r] = perm[m.assignment[r]];
    CHECK(match_is_valid(b, composed));
  }
  CHECK(typed > 100);
}

TEST_CASE("type 7 basis matches the table") {
  const auto a = alg({{"0", "0", "1"}, {"0", "0", "-1"}, {"1", "1", "0"}});
  const auto m = classify(a);
  const auto space = derivation_space(a);
  const auto check = template_check(a, m, space);
  CHECK(check.type == 7);
  CHECK(check.solver_dimension == 1);
  CHECK(check.parameter_count == 1);
  CHECK(check.passes);
  CHECK_FALSE(check.table_discrepancy);
  CHECK_FALSE(check.violation.has_value());
  CHECK(check.cells[0 * 3 + 2].status == CellStatus::RequiredZero);
  CHECK(check.cells[0 * 3 + 1].status == CellStatus::Parametric);
  CHECK(check.cells[0 * 3 + 1].relation == "d_ij = 3*w_kj/w_ki*d_ii");
  CHECK(check.cells[0].status == CellStatus::Free);
}

TEST_CASE("template checks pass vacuously on zero spaces") {
  for (const auto& a : {alg({{"0", "0", "1"}, {"0", "0", "1"}, {"1", "1", "0"}}),
                        alg({{"1", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"}})}) {
    const auto m = classify(a);
    REQUIRE(m.verdict == MatchVerdict::Type);
    const auto check = template_check(a, m, derivation_space(a));
    CHECK(check.solver_dimension == 0);
    CHECK(check.passes);
  }
  CHECK(classify(alg({{"1", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"}})).type == 2);
}

TEST_CASE("template violations are reported as discrepancies") {
  const auto a = alg({{"0", "0", "1"}, {"0", "0", "-1"}, {"1", "1", "0"}});
  const auto m = classify(a);

  DerivationSpace wrong;
  wrong.dimension = 1;
  wrong.basis.push_back(test::mat({{"1", "3", "5"}, {"3", "1", "0"}, {"0", "0", "2"}}));
  auto check = template_check(a, m, wrong);
  CHECK_FALSE(check.passes);
  CHECK(check.table_discrepancy);
  REQUIRE(check.violation.has_value());
  CHECK(check.violation->cell == Cell{0, 2});
  CHECK(check.violation->actual == Rational(5));
  CHECK(check.violation->expected == Rational(0));

  wrong.basis[0] = test::mat({{"1", "3", "0"}, {"3", "1", "0"}, {"0", "0", "3"}});
  check = template_check(a, m, wrong);
  REQUIRE(check.violation.has_value());
  CHECK(check.violation->cell == Cell{2, 2});
  CHECK(check.violation->expected == Rational(2));
  CHECK(check.violation->relation == "d_kk = 2*d_ii");

  TypeMatch twin_free;
  twin_free.verdict = MatchVerdict::TwinFree;
  CHECK_THROWS_AS(template_check(a, twin_free, wrong), std::invalid_argument);
}

TEST_CASE("special type 13 instance disagrees with the table") {
  const auto a = alg({{"-2", "2", "0"}, {"2", "-2", "0"}, {"-2", "-2", "0"}});
  const auto m = classify(a);
  REQUIRE(m.verdict == MatchVerdict::Type);
  CHECK(m.type == 13);
  const auto space = derivation_space(a);
  const auto check = template_check(a, m, space);
  CHECK(check.solver_dimension == 1);
  CHECK(check.table_discrepancy);
  REQUIRE(check.violation.has_value());
  // Every basis element is still a derivation; only the table relation fails.
  for (const auto& d : space.basis) CHECK(is_derivation(a, d).holds);
}

TEST_CASE("random instances of every type pass their template") {
  RandomRationals rng(2024);
  for (const auto& t : type_table()) {
    for (int rep = 0; rep < 4; ++rep) {
      const auto perm = permutation_from(rng);
      const auto a = type_instance(t, perm, [&](int, int) { return rng.nonzero(); });
      const auto m = classify(a);
      INFO("type " << t.id << " rep " << rep);
      REQUIRE(m.verdict == MatchVerdict::Type);
      CHECK(m.type == t.id);
      const auto space = derivation_space(a);
      const auto check = template_check(a, m, space);
      CHECK(check.passes);
      if (t.is_zero_type()) CHECK(space.dimension == 0);
      CHECK(space.dimension <= t.parameter_count());
    }
  }
}

TEST_CASE("compatible type 7 instances have a one-dimensional space") {
  RandomRationals rng(77);
  for (int rep = 0; rep < 20; ++rep) {
    const Rational ik = rng.nonzero();
    const Rational ki = rng.nonzero();
    const Rational kj = rng.nonzero();
    const Rational jk = -ik * ki * ki / (kj * kj);
    const auto& t = type_template(7);
    const auto a = type_instance(t, {0, 1, 2}, [&](int x, int y) {
      if (x == 0 && y == 2) return ik;
      if (x == 1 && y == 2) return jk;
      if (x == 2 && y == 1) return kj;
      return ki;
    });
    const auto space = derivation_space(a);
    REQUIRE(space.dimension == 1);
    const auto& d = space.basis[0];
    const Rational p = d(0, 0);
    REQUIRE_FALSE(p.is_zero());
    CHECK(d(0, 1) == Rational(3) * kj / ki * p);
    CHECK(d(1, 0) == Rational(3) * ki / kj * p);
    CHECK(d(1, 1) == p);
    CHECK(d(2, 2) == Rational(2) * p);
    for (const Cell c : {Cell{0, 2}, Cell{1, 2}, Cell{2, 0}, Cell{2, 1}}) CHECK(d(c.row, c.col).is_zero());
    CHECK(template_check(a, classify(a), space).passes);
  }
}
