#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "evoder/algebra.hpp"

namespace evoder {

/// Sorted list of zero-based vertex indices.
using VertexSet = std::vector<int>;

/// 0/1 adjacency matrix.
using Adjacency = SquareMatrix<std::uint8_t>;

/// Directed graph with an arrow i -> j exactly when omega(i, j) != 0.
class DirectedGraph {
 public:
  explicit DirectedGraph(Adjacency adjacency);

  int size() const { return adjacency_.size(); }
  bool has_arrow(int from, int to) const { return adjacency_(from, to) != 0; }
  bool has_loop(int v) const { return adjacency_(v, v) != 0; }
  const Adjacency& adjacency() const { return adjacency_; }

  /// First-generation descendants D^1(v), sorted.
  const VertexSet& descendants(int v) const { return out_[static_cast<std::size_t>(v)]; }

  int arrow_count() const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  Adjacency adjacency_;
  std::vector<VertexSet> out_;
};

DirectedGraph associated_graph(const EvolutionAlgebra& algebra);

/// D^1(U): union of the descendants of every vertex in `sources`.
/// Throws IndexOutOfRange for a vertex outside the graph and std::invalid_argument
/// when `sources` is empty.
VertexSet descendants(const DirectedGraph& graph, const VertexSet& sources);

/// Simple directed cycle v_0 -> v_1 -> ... -> v_{m-1} -> v_0. A loop has m = 1.
struct VertexCycle {
  std::vector<int> vertices;

  /// True when every consecutive pair (with wrap-around) is an arrow and the
  /// vertices are distinct.
  bool is_valid_in(const DirectedGraph& graph) const;
};

struct GraphProperties {
  VertexSet sinks;
  bool non_degenerate = false;
  bool connected = false;
  std::optional<VertexCycle> cycle;
};

/// Sinks, non-degeneracy, connectivity of the underlying undirected graph, and
/// a cycle when one exists. When the graph has no sinks a cycle is always found
/// by walking forward along the smallest-index arrow until a vertex repeats.
GraphProperties graph_properties(const EvolutionAlgebra& algebra, const DirectedGraph& graph);

std::optional<VertexCycle> find_cycle(const DirectedGraph& graph);

bool is_connected(const DirectedGraph& graph);

}  // namespace evoder
