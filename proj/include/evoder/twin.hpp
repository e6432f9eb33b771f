#pragma once

#include <vector>

#include "evoder/graph.hpp"

namespace evoder {

/// Vertices sharing one descendant set, split by whether they carry a loop.
struct TwinClass {
  VertexSet members;
  VertexSet with_loop;
  VertexSet without_loop;
  VertexSet shared_descendants;

  friend bool operator==(const TwinClass&, const TwinClass&) = default;
};

/// Partition of the vertices by equality of D^1, classes ordered by smallest member.
class TwinPartition {
 public:
  explicit TwinPartition(std::vector<TwinClass> classes, int vertex_count);

  const std::vector<TwinClass>& classes() const { return classes_; }
  /// Index into classes() of the class holding `v`.
  int class_of(int v) const { return class_of_[static_cast<std::size_t>(v)]; }
  bool same_class(int a, int b) const { return class_of(a) == class_of(b); }

  friend bool operator==(const TwinPartition& a, const TwinPartition& b) { return a.classes_ == b.classes_; }

 private:
  std::vector<TwinClass> classes_;
  std::vector<int> class_of_;
};

TwinPartition twin_partition(const DirectedGraph& graph);

bool is_twin_free(const TwinPartition& partition);

}  // namespace evoder
