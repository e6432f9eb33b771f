#include "evoder/twin.hpp"

#include <map>

namespace evoder {

TwinPartition::TwinPartition(std::vector<TwinClass> classes, int vertex_count)
    : classes_(std::move(classes)), class_of_(static_cast<std::size_t>(vertex_count), -1) {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (int v : classes_[c].members) class_of_[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }
}

TwinPartition twin_partition(const DirectedGraph& graph) {
  // Keyed by the descendant set itself; the first vertex seen for a key is the
  // smallest member, so insertion order gives the class order.
  std::map<VertexSet, std::size_t> index;
  std::vector<TwinClass> classes;
  for (int v = 0; v < graph.size(); ++v) {
    const VertexSet& d = graph.descendants(v);
    auto [it, inserted] = index.try_emplace(d, classes.size());
    if (inserted) classes.push_back(TwinClass{{}, {}, {}, d});
    TwinClass& cls = classes[it->second];
    cls.members.push_back(v);
    (graph.has_loop(v) ? cls.with_loop : cls.without_loop).push_back(v);
  }
  return TwinPartition(std::move(classes), graph.size());
}

bool is_twin_free(const TwinPartition& partition) {
  for (const auto& cls : partition.classes()) {
    if (cls.members.size() != 1) return false;
  }
  return true;
}

}  // namespace evoder
