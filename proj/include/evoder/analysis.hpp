#pragma once

#include <optional>
#include <vector>

#include "evoder/algebra.hpp"
#include "evoder/classify3.hpp"
#include "evoder/graph.hpp"
#include "evoder/solver.hpp"
#include "evoder/structural.hpp"
#include "evoder/twin.hpp"

namespace evoder {

/// A structural zero that some solver basis element contradicts.
struct StructuralConflict {
  Cell cell;
  int basis_index = 0;
  ZeroRule rule = ZeroRule::TwinSeparation;
};

struct Classification {
  TypeMatch match;
  std::optional<TemplateCheck> check;
};

/// Everything the tool derives from one structure matrix.
struct Analysis {
  EvolutionAlgebra algebra;
  DirectedGraph graph;
  GraphProperties properties;
  TwinPartition partition;
  bool twin_free = false;
  ZeroPattern pattern;
  DerivationSpace space;
  std::vector<StructuralConflict> conflicts;
  /// Present only for three-dimensional algebras.
  std::optional<Classification> classification;

  bool consistent() const { return conflicts.empty(); }
};

Analysis analyze(const EvolutionAlgebra& algebra);

/// Cells proven zero by `pattern` that are nonzero in some element of `space`.
std::vector<StructuralConflict> cross_check(const ZeroPattern& pattern, const DerivationSpace& space);

}  // namespace evoder
