#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evoder/algebra.hpp"
#include "evoder/expression.hpp"
#include "evoder/graph.hpp"
#include "evoder/solver.hpp"

namespace evoder {

/// Role positions i, j, k are 0, 1, 2 throughout this module.
using RoleAssignment = std::array<int, 3>;

struct TemplateRelation {
  Cell target;
  Expression value;
};

/// One row of the three-dimensional type table, in role coordinates.
struct TypeTemplate {
  int id = 0;
  std::vector<Cell> arrows;
  VertexSet twin_class;
  VertexSet shared_descendants;
  std::vector<Cell> zeros;
  std::vector<TemplateRelation> relations;

  Adjacency adjacency() const;
  bool is_zero_type() const { return zeros.size() == 9; }
  /// Entries that are neither required zero nor fixed by a relation.
  int parameter_count() const { return 9 - static_cast<int>(zeros.size() + relations.size()); }
};

/// Parses the record format of data/three_dim_types.txt. Throws Error("TableError").
std::vector<TypeTemplate> parse_type_table(std::string_view text);

/// The built-in table, parsed once.
const std::vector<TypeTemplate>& type_table();
const TypeTemplate& type_template(int id);

enum class MatchVerdict { Type, TwinFree, NotApplicable };

struct TypeMatch {
  MatchVerdict verdict = MatchVerdict::NotApplicable;
  int type = 0;
  /// assignment[role] is the zero-based vertex playing that role.
  RoleAssignment assignment{};
  int arrows = 0;
  std::string reason;
};

const char* to_string(MatchVerdict verdict);

/// Matches the adjacency pattern against every type and vertex bijection, taking
/// the lowest type and then the lexicographically smallest assignment.
TypeMatch classify(const EvolutionAlgebra& algebra);

enum class CellStatus { RequiredZero, Parametric, Free };

struct TemplateCell {
  CellStatus status = CellStatus::Free;
  /// Relation text for Parametric cells, in role letters.
  std::string relation;
};

struct TemplateViolation {
  int basis_index = 0;
  Cell cell;  // algebra coordinates
  Rational actual;
  /// Value the table predicts; nullopt when the relation divides by zero.
  std::optional<Rational> expected;
  std::string relation;
};

struct TemplateCheck {
  int type = 0;
  /// Indexed by algebra cell, row-major.
  std::array<TemplateCell, 9> cells{};
  int parameter_count = 0;
  int solver_dimension = 0;
  bool passes = true;
  std::optional<TemplateViolation> violation;
  /// Set when a computed derivation contradicts the transcribed table.
  bool table_discrepancy = false;
};

/// Checks every basis element against the matched type's zero mask and
/// relations. Throws std::invalid_argument unless the match is a Type verdict.
TemplateCheck template_check(const EvolutionAlgebra& algebra, const TypeMatch& match, const DerivationSpace& space);

/// Algebra whose graph is the type's pattern under `assignment`, with the
/// structure constant of role arrow (x, y) given by `value(x, y)`.
EvolutionAlgebra type_instance(const TypeTemplate& type, const RoleAssignment& assignment,
                               const std::function<Rational(int, int)>& value);

}  // namespace evoder
