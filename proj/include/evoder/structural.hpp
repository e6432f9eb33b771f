#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evoder/algebra.hpp"
#include "evoder/graph.hpp"
#include "evoder/twin.hpp"

namespace evoder {

/// Inference rules that prove an entry of every derivation matrix is zero.
enum class ZeroRule {
  TwinSeparation,
  Determinant2x2,
  GramDeterminant,
  SingletonLoop,
  LoopSplitDiagonal,
  LoopSplitNonsingular,
  SoleTarget,
  RestrictedIntersection,
  ContainedDescendants,
  LoopFreeClassPropagation,
  TwinSymmetry,
  DiagonalFromOffdiagonal,
};

const char* to_string(ZeroRule rule);
std::optional<ZeroRule> zero_rule_from_string(std::string_view name);

/// Rule-specific evidence. Index roles per rule:
///
///   TwinSeparation            [k]        k lies in exactly one of D(row), D(col)
///   Determinant2x2            [a, k, l]  k, l in D(a), a in {row, col}; values = [det]
///   GramDeterminant           []         values = [Gram determinant of rows row, col]
///   SingletonLoop             []
///   LoopSplitDiagonal         loop members of the class
///   LoopSplitNonsingular      loop members; matrix = W restricted to them; values = [det W]
///   SoleTarget                [t]        every member of the class has D = {t}
///   RestrictedIntersection    [k, j, l]  D(k) meets the class only in j; cell (j, l)
///   ContainedDescendants      [k, a, b]  D(class) meets the class in {a, b}
///   LoopFreeClassPropagation  [j]        j in D(class) with d(j,j) already zero
///   TwinSymmetry              [m]        m a shared descendant of the class
///   DiagonalFromOffdiagonal   a cycle of the graph
///
/// `premises` lists cells that must already be proven zero (with an earlier
/// step) for the rule to apply. DiagonalFromOffdiagonal requires every
/// off-diagonal cell and does not list them.
struct Witness {
  std::vector<int> indices;
  std::vector<Rational> values;
  std::vector<Cell> premises;
  std::vector<std::vector<Rational>> matrix;
};

struct ZeroCertificate {
  Cell cell;
  ZeroRule rule = ZeroRule::TwinSeparation;
  /// Position in firing order; premises always carry smaller steps.
  int step = 0;
  Witness witness;
};

/// Per-entry status grid. Cells only ever move from unknown to proven zero and
/// keep the certificate of the first rule that proved them.
class ZeroPattern {
 public:
  explicit ZeroPattern(int n);

  int size() const { return n_; }
  bool is_zero(int row, int col) const { return cells_[index(row, col)].has_value(); }
  bool is_zero(Cell c) const { return is_zero(c.row, c.col); }
  const std::optional<ZeroCertificate>& certificate(int row, int col) const { return cells_[index(row, col)]; }

  /// Records a proof unless the cell is already proven; returns whether it was new.
  bool prove(Cell cell, ZeroRule rule, Witness witness);

  int proven_count() const { return next_step_; }
  bool fully_zero() const { return next_step_ == n_ * n_; }

 private:
  std::size_t index(int row, int col) const { return static_cast<std::size_t>(row) * n_ + col; }

  int n_;
  int next_step_ = 0;
  std::vector<std::optional<ZeroCertificate>> cells_;
};

/// Least fixpoint of all rules starting from an empty pattern. Rules that rely on
/// non-degeneracy (TwinSeparation, DiagonalFromOffdiagonal) are skipped for
/// degenerate algebras.
ZeroPattern infer_zero_pattern(const EvolutionAlgebra& algebra, const DirectedGraph& graph,
                               const TwinPartition& partition);

/// Continues inference from an existing pattern.
ZeroPattern infer_zero_pattern(const EvolutionAlgebra& algebra, const DirectedGraph& graph,
                               const TwinPartition& partition, ZeroPattern seed);

/// One certificate per proven cell, row-major.
std::vector<ZeroCertificate> certificates(const ZeroPattern& pattern);

struct ReplayResult {
  bool ok = true;
  std::string reason;
};

/// Re-checks a certificate against the algebra and the pattern it belongs to,
/// recomputing every premise from the structure matrix.
ReplayResult replay_certificate(const EvolutionAlgebra& algebra, const ZeroPattern& pattern,
                                const ZeroCertificate& certificate);

}  // namespace evoder
