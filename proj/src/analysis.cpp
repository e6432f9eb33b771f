#include "evoder/analysis.hpp"

namespace evoder {

std::vector<StructuralConflict> cross_check(const ZeroPattern& pattern, const DerivationSpace& space) {
  std::vector<StructuralConflict> conflicts;
  for (const auto& cert : certificates(pattern)) {
    for (std::size_t b = 0; b < space.basis.size(); ++b) {
      if (!space.basis[b](cert.cell.row, cert.cell.col).is_zero()) {
        conflicts.push_back({cert.cell, static_cast<int>(b), cert.rule});
      }
    }
  }
  return conflicts;
}

Analysis analyze(const EvolutionAlgebra& algebra) {
  DirectedGraph graph = associated_graph(algebra);
  GraphProperties properties = graph_properties(algebra, graph);
  TwinPartition partition = twin_partition(graph);
  const bool twin_free = is_twin_free(partition);
  ZeroPattern pattern = infer_zero_pattern(algebra, graph, partition);
  DerivationSpace space = derivation_space(algebra);
  auto conflicts = cross_check(pattern, space);

  std::optional<Classification> classification;
  if (algebra.dimension() == 3) {
    Classification c{classify(algebra), std::nullopt};
    if (c.match.verdict == MatchVerdict::Type) c.check = template_check(algebra, c.match, space);
    classification = std::move(c);
  }
  return Analysis{algebra,
                  std::move(graph),
                  std::move(properties),
                  std::move(partition),
                  twin_free,
                  std::move(pattern),
                  std::move(space),
                  std::move(conflicts),
                  std::move(classification)};
}

}  // namespace evoder
