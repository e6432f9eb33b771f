#include "evoder/report.hpp"

#include <algorithm>

namespace evoder {

namespace {

Json index_list(const std::vector<int>& zero_based) {
  Json out = Json::array();
  for (int v : zero_based) out.push_back(v + 1);
  return out;
}

Json adjacency_json(const DirectedGraph& graph) {
  Json rows = Json::array();
  for (int i = 0; i < graph.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < graph.size(); ++j) row.push_back(graph.has_arrow(i, j) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* status_text(CellStatus status) {
  switch (status) {
    case CellStatus::RequiredZero: return "zero";
    case CellStatus::Parametric: return "relation";
    case CellStatus::Free: return "free";
  }
  return "free";
}

}  // namespace

Json to_json(const Rational& value) { return value.str(); }

Json to_json(const RationalMatrix& matrix) {
  Json rows = Json::array();
  for (int i = 0; i < matrix.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < matrix.size(); ++j) row.push_back(matrix(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const TwinPartition& partition) {
  Json classes = Json::array();
  for (const auto& cls : partition.classes()) {
    classes.push_back(Json{{"members", index_list(cls.members)},
                           {"with_loop", index_list(cls.with_loop)},
                           {"without_loop", index_list(cls.without_loop)}});
  }
  return classes;
}

Json to_json(const ZeroCertificate& certificate) {
  const Witness& w = certificate.witness;
  Json witnesses{{"indices", index_list(w.indices)}, {"values", Json::array()}, {"premises", Json::array()}};
  for (const auto& v : w.values) witnesses["values"].push_back(v.str());
  for (const auto& p : w.premises) witnesses["premises"].push_back(Json::array({p.row + 1, p.col + 1}));
  if (!w.matrix.empty()) {
    Json rows = Json::array();
    for (const auto& r : w.matrix) {
      Json row = Json::array();
      for (const auto& v : r) row.push_back(v.str());
      rows.push_back(std::move(row));
    }
    witnesses["matrix"] = std::move(rows);
  }
  return Json{{"row", certificate.cell.row + 1},
              {"col", certificate.cell.col + 1},
              {"rule", to_string(certificate.rule)},
              {"step", certificate.step + 1},
              {"witnesses", std::move(witnesses)}};
}

Json to_json(const DerivationSpace& space) {
  Json basis = Json::array();
  for (const auto& d : space.basis) basis.push_back(to_json(d));
  return Json{{"derivation_dimension", space.dimension}, {"basis", std::move(basis)}};
}

Json to_json(const TypeMatch& match) {
  Json out{{"verdict", to_string(match.verdict)}};
  if (match.verdict == MatchVerdict::Type) {
    out["type"] = match.type;
    out["assignment"] = Json{{"i", match.assignment[0] + 1}, {"j", match.assignment[1] + 1}, {"k", match.assignment[2] + 1}};
  }
  out["arrows"] = match.arrows;
  if (match.verdict == MatchVerdict::NotApplicable) out["reason"] = match.reason;
  return out;
}

Json to_json(const TemplateCheck& check) {
  Json cells = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 3; ++c) {
      const auto& cell = check.cells[static_cast<std::size_t>(r * 3 + c)];
      row.push_back(cell.status == CellStatus::Parametric ? cell.relation : status_text(cell.status));
    }
    cells.push_back(std::move(row));
  }
  Json out{{"type", check.type},
           {"cells", std::move(cells)},
           {"parameter_count", check.parameter_count},
           {"solver_dimension", check.solver_dimension},
           {"passes", check.passes},
           {"table_discrepancy", check.table_discrepancy}};
  if (check.violation) {
    const auto& v = *check.violation;
    out["violation"] = Json{{"basis_index", v.basis_index + 1},
                            {"row", v.cell.row + 1},
                            {"col", v.cell.col + 1},
                            {"actual", v.actual.str()},
                            {"expected", v.expected ? Json(v.expected->str()) : Json(nullptr)},
                            {"relation", v.relation}};
  }
  return out;
}

Json to_json(const LeibnizCheck& check) {
  Json out{{"is_derivation", check.holds}};
  if (check.first_violation) {
    out["first_violation"] = check.first_violation->label();
    out["residual"] = check.residual.str();
  }
  return out;
}

Json conflicts_json(const std::vector<StructuralConflict>& conflicts) {
  Json out = Json::array();
  for (const auto& c : conflicts) {
    out.push_back(Json{{"row", c.cell.row + 1},
                       {"col", c.cell.col + 1},
                       {"rule", to_string(c.rule)},
                       {"basis_index", c.basis_index + 1}});
  }
  return out;
}

Json report_json(const Analysis& a) {
  Json out;
  out["dimension"] = a.algebra.dimension();
  out["structure_matrix"] = to_json(a.algebra.structure());
  out["graph"] = adjacency_json(a.graph);
  out["sinks"] = index_list(a.properties.sinks);
  out["connected"] = a.properties.connected;
  out["non_degenerate"] = a.properties.non_degenerate;
  out["cycle"] = a.properties.cycle ? index_list(a.properties.cycle->vertices) : Json(nullptr);
  out["twin_partition"] = to_json(a.partition);
  out["twin_free"] = a.twin_free;
  Json certs = Json::array();
  for (const auto& c : certificates(a.pattern)) certs.push_back(to_json(c));
  out["zero_certificates"] = std::move(certs);
  const Json space = to_json(a.space);
  out["derivation_dimension"] = space["derivation_dimension"];
  out["basis"] = space["basis"];
  out["consistent"] = a.consistent();
  if (!a.consistent()) out["conflicts"] = conflicts_json(a.conflicts);
  if (a.classification) {
    Json cls = to_json(a.classification->match);
    if (a.classification->check) cls["template_check"] = to_json(*a.classification->check);
    out["classification"] = std::move(cls);
  }
  return out;
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

std::string emit_report(const Analysis& analysis) { return dump(report_json(analysis)); }

std::string format_aligned(const RationalMatrix& matrix, const std::string& indent) {
  std::vector<std::size_t> width(static_cast<std::size_t>(matrix.size()), 0);
  for (int i = 0; i < matrix.size(); ++i) {
    for (int j = 0; j < matrix.size(); ++j) width[j] = std::max(width[j], matrix(i, j).str().size());
  }
  std::string out;
  for (int i = 0; i < matrix.size(); ++i) {
    out += indent + "[";
    for (int j = 0; j < matrix.size(); ++j) {
      const std::string cell = matrix(i, j).str();
      out += (j ? "  " : " ") + std::string(width[j] - cell.size(), ' ') + cell;
    }
    out += " ]\n";
  }
  return out;
}

}  // namespace evoder
