#include "evoder/classify3.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "evoder/errors.hpp"
#include "evoder/twin.hpp"

namespace evoder {

namespace detail {
std::string_view three_dim_type_table_text();
}

namespace {

[[noreturn]] void table_error(int line, const std::string& what) {
  throw Error("TableError", "line " + std::to_string(line) + ": " + what);
}

Cell role_cell(const std::string& token, int line) {
  if (token.size() != 2 || role_index(token[0]) < 0 || role_index(token[1]) < 0) {
    table_error(line, "bad role pair \"" + token + "\"");
  }
  return {role_index(token[0]), role_index(token[1])};
}

VertexSet role_set(std::istringstream& in, int line) {
  VertexSet out;
  std::string tok;
  while (in >> tok) {
    if (tok.size() != 1 || role_index(tok[0]) < 0) table_error(line, "bad role \"" + tok + "\"");
    out.push_back(role_index(tok[0]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Adjacency TypeTemplate::adjacency() const {
  Adjacency adj(3, 0);
  for (const Cell& a : arrows) adj(a.row, a.col) = 1;
  return adj;
}

std::vector<TypeTemplate> parse_type_table(std::string_view text) {
  std::vector<TypeTemplate> out;
  std::optional<TypeTemplate> current;
  std::istringstream lines{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(lines, raw)) {
    ++line;
    std::istringstream in(raw);
    std::string key;
    if (!(in >> key) || key[0] == '#') continue;
    if (key == "type") {
      if (current) table_error(line, "missing end");
      current.emplace();
      if (!(in >> current->id)) table_error(line, "bad type number");
      continue;
    }
    if (!current) table_error(line, "field outside a record");
    if (key == "arrows" || key == "zero") {
      auto& cells = key == "arrows" ? current->arrows : current->zeros;
      std::string tok;
      while (in >> tok) cells.push_back(role_cell(tok, line));
    } else if (key == "twin") {
      current->twin_class = role_set(in, line);
    } else if (key == "descendants") {
      current->shared_descendants = role_set(in, line);
    } else if (key == "relation") {
      std::string lhs, eq;
      in >> lhs >> eq;
      if (lhs.size() != 4 || lhs.compare(0, 2, "d_") != 0 || eq != "=") table_error(line, "bad relation");
      std::string rhs;
      std::getline(in, rhs);
      rhs.erase(0, rhs.find_first_not_of(' '));
      current->relations.push_back({role_cell(lhs.substr(2), line), Expression::parse(rhs)});
    } else if (key == "end") {
      out.push_back(std::move(*current));
      current.reset();
    } else {
      table_error(line, "unknown field \"" + key + "\"");
    }
  }
  if (current) table_error(line, "missing end");
  return out;
}

const std::vector<TypeTemplate>& type_table() {
  static const std::vector<TypeTemplate> table = parse_type_table(detail::three_dim_type_table_text());
  return table;
}

const TypeTemplate& type_template(int id) {
  for (const auto& t : type_table()) {
    if (t.id == id) return t;
  }
  throw std::out_of_range("no type " + std::to_string(id));
}

const char* to_string(MatchVerdict verdict) {
  switch (verdict) {
    case MatchVerdict::Type: return "Type";
    case MatchVerdict::TwinFree: return "TwinFree";
    case MatchVerdict::NotApplicable: return "NotApplicable";
  }
  return "NotApplicable";
}

TypeMatch classify(const EvolutionAlgebra& algebra) {
  TypeMatch match;
  if (algebra.dimension() != 3) {
    match.reason = "n must be 3";
    return match;
  }
  const DirectedGraph graph = associated_graph(algebra);
  match.arrows = graph.arrow_count();
  const GraphProperties props = graph_properties(algebra, graph);
  if (!props.non_degenerate) {
    match.reason = "algebra is degenerate";
    return match;
  }
  if (!props.connected) {
    match.reason = "graph is disconnected";
    return match;
  }
  if (is_twin_free(twin_partition(graph))) {
    match.verdict = MatchVerdict::TwinFree;
    return match;
  }
  for (const auto& type : type_table()) {
    RoleAssignment perm{0, 1, 2};
    do {
      bool same = true;
      for (int x = 0; x < 3 && same; ++x) {
        for (int y = 0; y < 3 && same; ++y) {
          const bool role_arrow = std::find(type.arrows.begin(), type.arrows.end(), Cell{x, y}) != type.arrows.end();
          same = role_arrow == graph.has_arrow(perm[x], perm[y]);
        }
      }
      if (same) {
        match.verdict = MatchVerdict::Type;
        match.type = type.id;
        match.assignment = perm;
        return match;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  match.reason = "pattern outside table";
  return match;
}

TemplateCheck template_check(const EvolutionAlgebra& algebra, const TypeMatch& match, const DerivationSpace& space) {
  if (match.verdict != MatchVerdict::Type) throw std::invalid_argument("template_check needs a Type verdict");
  const TypeTemplate& type = type_template(match.type);
  const auto& as = match.assignment;
  auto algebra_cell = [&](Cell role) { return Cell{as[role.row], as[role.col]}; };

  TemplateCheck check;
  check.type = type.id;
  check.parameter_count = type.parameter_count();
  check.solver_dimension = space.dimension;
  for (const Cell& z : type.zeros) {
    const Cell c = algebra_cell(z);
    check.cells[c.row * 3 + c.col].status = CellStatus::RequiredZero;
  }
  for (const auto& rel : type.relations) {
    const Cell c = algebra_cell(rel.target);
    check.cells[c.row * 3 + c.col] = {CellStatus::Parametric,
                                      std::string("d_") + role_letter(rel.target.row) + role_letter(rel.target.col) +
                                          " = " + rel.value.text()};
  }

  for (std::size_t b = 0; b < space.basis.size() && check.passes; ++b) {
    const DerivationMatrix& d = space.basis[b];
    for (const Cell& z : type.zeros) {
      const Cell c = algebra_cell(z);
      if (!d(c.row, c.col).is_zero()) {
        check.passes = false;
        check.violation = TemplateViolation{static_cast<int>(b), c, d(c.row, c.col), Rational(0), "0"};
        break;
      }
    }
    if (!check.passes) break;
    auto value_of = [&](const Symbol& s) {
      const int r = as[s.row];
      const int c = as[s.col];
      return s.kind == Symbol::Kind::StructureConstant ? algebra.omega(r, c) : d(r, c);
    };
    for (const auto& rel : type.relations) {
      const Cell c = algebra_cell(rel.target);
      const auto expected = rel.value.evaluate(value_of);
      if (!expected || *expected != d(c.row, c.col)) {
        check.passes = false;
        check.violation = TemplateViolation{static_cast<int>(b), c, d(c.row, c.col), expected,
                                            check.cells[c.row * 3 + c.col].relation};
        break;
      }
    }
  }
  check.table_discrepancy = !check.passes;
  return check;
}

EvolutionAlgebra type_instance(const TypeTemplate& type, const RoleAssignment& assignment,
                               const std::function<Rational(int, int)>& value) {
  RationalMatrix m(3);
  for (const Cell& a : type.arrows) {
    Rational v = value(a.row, a.col);
    if (v.is_zero()) throw std::invalid_argument("arrow value must be nonzero");
    m(assignment[a.row], assignment[a.col]) = std::move(v);
  }
  return EvolutionAlgebra(std::move(m));
}

}  // namespace evoder
