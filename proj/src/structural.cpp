#include "evoder/structural.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace evoder {

namespace {

constexpr std::array<std::pair<ZeroRule, const char*>, 12> kRuleNames{{
    {ZeroRule::TwinSeparation, "TwinSeparation"},
    {ZeroRule::Determinant2x2, "Determinant2x2"},
    {ZeroRule::GramDeterminant, "GramDeterminant"},
    {ZeroRule::SingletonLoop, "SingletonLoop"},
    {ZeroRule::LoopSplitDiagonal, "LoopSplitDiagonal"},
    {ZeroRule::LoopSplitNonsingular, "LoopSplitNonsingular"},
    {ZeroRule::SoleTarget, "SoleTarget"},
    {ZeroRule::RestrictedIntersection, "RestrictedIntersection"},
    {ZeroRule::ContainedDescendants, "ContainedDescendants"},
    {ZeroRule::LoopFreeClassPropagation, "LoopFreeClassPropagation"},
    {ZeroRule::TwinSymmetry, "TwinSymmetry"},
    {ZeroRule::DiagonalFromOffdiagonal, "DiagonalFromOffdiagonal"},
}};

bool contains(const VertexSet& set, int v) { return std::binary_search(set.begin(), set.end(), v); }

}  // namespace

const char* to_string(ZeroRule rule) {
  for (const auto& [r, name] : kRuleNames) {
    if (r == rule) return name;
  }
  return "Unknown";
}

std::optional<ZeroRule> zero_rule_from_string(std::string_view name) {
  for (const auto& [r, n] : kRuleNames) {
    if (name == n) return r;
  }
  return std::nullopt;
}

ZeroPattern::ZeroPattern(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {}

bool ZeroPattern::prove(Cell cell, ZeroRule rule, Witness witness) {
  auto& slot = cells_[index(cell.row, cell.col)];
  if (slot) return false;
  slot = ZeroCertificate{cell, rule, next_step_++, std::move(witness)};
  return true;
}

std::vector<ZeroCertificate> certificates(const ZeroPattern& pattern) {
  std::vector<ZeroCertificate> out;
  for (int r = 0; r < pattern.size(); ++r) {
    for (int c = 0; c < pattern.size(); ++c) {
      if (const auto& cert = pattern.certificate(r, c)) out.push_back(*cert);
    }
  }
  return out;
}

namespace {

// Determinant of a square rational matrix by fraction-exact elimination.
Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

class Engine {
 public:
  Engine(const EvolutionAlgebra& algebra, const DirectedGraph& graph, const TwinPartition& partition,
         ZeroPattern pattern)
      : a_(algebra), g_(graph), p_(partition), z_(std::move(pattern)), n_(algebra.dimension()) {
    non_degenerate_ = true;
    for (int i = 0; i < n_; ++i) non_degenerate_ = non_degenerate_ && !g_.descendants(i).empty();
  }

  ZeroPattern run() {
    do {
      changed_ = false;
      set_based_rules();
      determinant_rules(/*loop_pairs_only=*/true);
      propagation_rules();
      determinant_rules(/*loop_pairs_only=*/false);
    } while (changed_);
    return std::move(z_);
  }

 private:
  const Rational& w(int i, int k) const { return a_.omega(i, k); }

  void prove(int row, int col, ZeroRule rule, const Witness& witness) {
    if (z_.prove(Cell{row, col}, rule, witness)) changed_ = true;
  }

  bool all_proven(const std::vector<Cell>& cells) const {
    return std::all_of(cells.begin(), cells.end(), [&](const Cell& c) { return z_.is_zero(c); });
  }

  // ---- set-based rules -------------------------------------------------------

  void set_based_rules() {
    if (non_degenerate_) twin_separation();
    sole_target();
    restricted_intersection();
  }

  // Distinct twin classes: some k lies in exactly one of D(i), D(j). Then the
  // pair relation at k kills one of d(i,j), d(j,i); the other falls either to a
  // common descendant or, when none exists, to a private descendant of the
  // other vertex (which non-degeneracy guarantees).
  void twin_separation() {
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (p_.same_class(i, j)) continue;
        const auto& di = g_.descendants(i);
        const auto& dj = g_.descendants(j);
        VertexSet diff;
        std::set_symmetric_difference(di.begin(), di.end(), dj.begin(), dj.end(), std::back_inserter(diff));
        const Witness witness{{diff.front()}, {}, {}, {}};
        prove(i, j, ZeroRule::TwinSeparation, witness);
        prove(j, i, ZeroRule::TwinSeparation, witness);
      }
    }
  }

  void sole_target() {
    for (const auto& cls : p_.classes()) {
      if (cls.shared_descendants.size() != 1) continue;
      const int t = cls.shared_descendants.front();
      if (!contains(cls.members, t)) continue;
      const Witness witness{{t}, {}, {}, {}};
      prove(t, t, ZeroRule::SoleTarget, witness);
      for (int j : cls.members) {
        if (j == t) continue;
        prove(t, j, ZeroRule::SoleTarget, witness);
        prove(j, t, ZeroRule::SoleTarget, witness);
        prove(j, j, ZeroRule::SoleTarget, witness);
      }
    }
  }

  // D(k) meets the class T only in j. The diagonal relation at (k, l), l in T
  // other than j, reads w(k,j) d(j,l) + sum_{h in D(k), h != j} w(k,h) d(h,l) = 0.
  void restricted_intersection() {
    for (const auto& cls : p_.classes()) {
      if (cls.members.size() < 2) continue;
      for (int k = 0; k < n_; ++k) {
        VertexSet meet;
        const auto& dk = g_.descendants(k);
        std::set_intersection(dk.begin(), dk.end(), cls.members.begin(), cls.members.end(),
                              std::back_inserter(meet));
        if (meet.size() != 1) continue;
        const int j = meet.front();
        for (int l : cls.members) {
          if (l == j) continue;
          std::vector<Cell> premises;
          for (int h : dk) {
            if (h != j) premises.push_back({h, l});
          }
          if (!all_proven(premises)) continue;
          // The transposed cell follows from TwinSymmetry.
          prove(j, l, ZeroRule::RestrictedIntersection, Witness{{k, j, l}, {}, premises, {}});
        }
      }
    }
  }

  // ---- determinant rules -----------------------------------------------------

  bool is_loop_pair(int i, int j) const {
    return p_.same_class(i, j) && g_.has_loop(i) && g_.has_loop(j);
  }

  void determinant_rules(bool loop_pairs_only) {
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (z_.is_zero(i, j) && z_.is_zero(j, i)) continue;
        if (loop_pairs_only && !is_loop_pair(i, j)) continue;
        if (auto witness = determinant_2x2(i, j)) {
          prove(i, j, ZeroRule::Determinant2x2, *witness);
          prove(j, i, ZeroRule::Determinant2x2, *witness);
        } else if (auto gram = gram_determinant(i, j)) {
          prove(i, j, ZeroRule::GramDeterminant, *gram);
          prove(j, i, ZeroRule::GramDeterminant, *gram);
        }
      }
    }
  }

  // Smallest (k, l), k < l, in D(anchor) with w(a,k) w(b,l) - w(a,l) w(b,k) != 0,
  // trying anchor i before anchor j.
  std::optional<Witness> determinant_2x2(int i, int j) const {
    for (const auto& [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
      const auto& da = g_.descendants(a);
      if (da.size() < 2) continue;
      for (std::size_t x = 0; x < da.size(); ++x) {
        for (std::size_t y = x + 1; y < da.size(); ++y) {
          const int k = da[x];
          const int l = da[y];
          Rational det = w(a, k) * w(b, l) - w(a, l) * w(b, k);
          if (!det.is_zero()) return Witness{{a, k, l}, {det}, {}, {}};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Witness> gram_determinant(int i, int j) const {
    if (n_ < 3) return std::nullopt;
    Rational sii, sjj, sij;
    for (int k = 0; k < n_; ++k) {
      sii += w(i, k) * w(i, k);
      sjj += w(j, k) * w(j, k);
      sij += w(i, k) * w(j, k);
    }
    Rational gram = sii * sjj - sij * sij;
    if (gram.is_zero()) return std::nullopt;
    return Witness{{}, {gram}, {}, {}};
  }

  // ---- propagation rules -----------------------------------------------------

  void propagation_rules() {
    if (non_degenerate_) diagonal_from_offdiagonal();
    singleton_loop();
    contained_descendants();
    loop_split();
    twin_symmetry();
    loop_free_class_propagation();
  }

  // Premises shared by both loop-split rules: off-diagonal pairs among the loop
  // members, plus cells (k, target) for descendants k outside the class.
  std::vector<Cell> loop_split_premises(const TwinClass& cls, const VertexSet& targets) const {
    std::vector<Cell> premises;
    for (int a : cls.with_loop) {
      for (int b : cls.with_loop) {
        if (a != b) premises.push_back({a, b});
      }
    }
    for (int k : cls.shared_descendants) {
      if (contains(cls.members, k)) continue;
      for (int t : targets) premises.push_back({k, t});
    }
    return premises;
  }

  void loop_split() {
    for (const auto& cls : p_.classes()) {
      if (cls.with_loop.empty()) continue;

      const auto diag_premises = loop_split_premises(cls, cls.with_loop);
      if (!all_proven(diag_premises)) continue;
      const Witness diag_witness{cls.with_loop, {}, diag_premises, {}};
      for (int i : cls.members) prove(i, i, ZeroRule::LoopSplitDiagonal, diag_witness);

      if (cls.without_loop.empty()) continue;
      const auto premises = loop_split_premises(cls, cls.without_loop);
      if (!all_proven(premises)) continue;
      std::vector<std::vector<Rational>> wl;
      for (int a : cls.with_loop) {
        auto& row = wl.emplace_back();
        for (int b : cls.with_loop) row.push_back(w(a, b));
      }
      Rational det = determinant(wl);
      if (det.is_zero()) continue;
      const Witness witness{cls.with_loop, {det}, premises, wl};
      for (int i : cls.with_loop) {
        for (int j : cls.without_loop) {
          prove(i, j, ZeroRule::LoopSplitNonsingular, witness);
          prove(j, i, ZeroRule::LoopSplitNonsingular, witness);
        }
      }
    }
  }

  void singleton_loop() {
    for (const auto& cls : p_.classes()) {
      if (cls.members.size() != 1 || cls.with_loop.empty()) continue;
      const int i = cls.members.front();
      std::vector<Cell> premises;
      for (int k : g_.descendants(i)) {
        if (k != i) premises.push_back({k, i});
      }
      if (all_proven(premises)) prove(i, i, ZeroRule::SingletonLoop, Witness{{}, {}, premises, {}});
    }
  }

  void twin_symmetry() {
    for (const auto& cls : p_.classes()) {
      if (cls.shared_descendants.empty()) continue;
      const int m = cls.shared_descendants.front();
      for (int a : cls.members) {
        for (int b : cls.members) {
          if (a != b && z_.is_zero(b, a) && !z_.is_zero(a, b)) {
            prove(a, b, ZeroRule::TwinSymmetry, Witness{{m}, {}, {{b, a}}, {}});
          }
        }
      }
    }
  }

  bool descendants_in_distinct_classes(const VertexSet& d) const {
    for (std::size_t x = 0; x < d.size(); ++x) {
      for (std::size_t y = x + 1; y < d.size(); ++y) {
        if (p_.same_class(d[x], d[y])) return false;
      }
    }
    return true;
  }

  void loop_free_class_propagation() {
    for (const auto& cls : p_.classes()) {
      if (!cls.with_loop.empty() || cls.shared_descendants.empty()) continue;
      const auto& dt = cls.shared_descendants;
      if (!descendants_in_distinct_classes(dt)) continue;
      for (int j : dt) {
        std::vector<Cell> premises{{j, j}};
        for (int h : dt) {
          if (h != j) premises.push_back({h, j});
        }
        if (!all_proven(premises)) continue;
        const Witness witness{{j}, {}, premises, {}};
        for (int i : cls.members) prove(i, i, ZeroRule::LoopFreeClassPropagation, witness);
        break;
      }
    }
  }

  void contained_descendants() {
    for (const auto& cls : p_.classes()) {
      const auto& dt = cls.shared_descendants;
      VertexSet inside;
      std::set_intersection(dt.begin(), dt.end(), cls.members.begin(), cls.members.end(),
                            std::back_inserter(inside));
      if (inside.size() != 2) continue;
      const int a = inside[0];
      const int b = inside[1];
      for (int k : dt) {
        if (k == a || k == b || !g_.has_loop(k)) continue;
        const auto& dk = g_.descendants(k);
        const bool contained =
            std::all_of(dk.begin(), dk.end(), [&](int h) { return h == k || contains(cls.members, h); });
        if (!contained) continue;

        std::vector<Cell> premises;
        for (int h : dk) {
          if (h != k) premises.push_back({h, k});
        }
        for (int s : dt) {
          if (s == k) continue;
          premises.push_back({s, k});
          premises.push_back({k, s});
        }
        for (int h : dt) {
          if (h == a || h == b) continue;
          premises.push_back({h, a});
          premises.push_back({h, b});
        }
        std::sort(premises.begin(), premises.end());
        premises.erase(std::unique(premises.begin(), premises.end()), premises.end());
        if (!all_proven(premises)) continue;

        const Witness witness{{k, a, b}, {}, premises, {}};
        prove(k, k, ZeroRule::ContainedDescendants, witness);
        prove(a, a, ZeroRule::ContainedDescendants, witness);
        prove(b, b, ZeroRule::ContainedDescendants, witness);
        prove(b, a, ZeroRule::ContainedDescendants, witness);
        prove(a, b, ZeroRule::ContainedDescendants, witness);
        break;
      }
    }
  }

  void diagonal_from_offdiagonal() {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i != j && !z_.is_zero(i, j)) return;
      }
    }
    const auto cycle = find_cycle(g_);
    if (!cycle) return;  // unreachable for a sink-free graph
    const Witness witness{cycle->vertices, {}, {}, {}};
    for (int i = 0; i < n_; ++i) prove(i, i, ZeroRule::DiagonalFromOffdiagonal, witness);
  }

  const EvolutionAlgebra& a_;
  const DirectedGraph& g_;
  const TwinPartition& p_;
  ZeroPattern z_;
  int n_;
  bool non_degenerate_ = true;
  bool changed_ = false;
};

}  // namespace

ZeroPattern infer_zero_pattern(const EvolutionAlgebra& algebra, const DirectedGraph& graph,
                               const TwinPartition& partition) {
  return infer_zero_pattern(algebra, graph, partition, ZeroPattern(algebra.dimension()));
}

ZeroPattern infer_zero_pattern(const EvolutionAlgebra& algebra, const DirectedGraph& graph,
                               const TwinPartition& partition, ZeroPattern seed) {
  if (graph.size() != algebra.dimension() || seed.size() != algebra.dimension()) {
    throw ShapeMismatch("graph, pattern and algebra sizes differ");
  }
  return Engine(algebra, graph, partition, std::move(seed)).run();
}

}  // namespace evoder
