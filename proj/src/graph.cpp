#include "evoder/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace evoder {

DirectedGraph::DirectedGraph(Adjacency adjacency) : adjacency_(std::move(adjacency)) {
  const int n = adjacency_.size();
  out_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (adjacency_(i, j)) out_[static_cast<std::size_t>(i)].push_back(j);
    }
  }
}

int DirectedGraph::arrow_count() const {
  int count = 0;
  for (const auto& row : out_) count += static_cast<int>(row.size());
  return count;
}

DirectedGraph associated_graph(const EvolutionAlgebra& algebra) {
  const int n = algebra.dimension();
  Adjacency adjacency(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) adjacency(i, j) = algebra.omega(i, j).is_zero() ? 0 : 1;
  }
  return DirectedGraph(std::move(adjacency));
}

VertexSet descendants(const DirectedGraph& graph, const VertexSet& sources) {
  if (sources.empty()) throw std::invalid_argument("descendants of an empty vertex set");
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(graph.size()), 0);
  for (int v : sources) {
    if (v < 0 || v >= graph.size()) {
      throw IndexOutOfRange("vertex " + std::to_string(v + 1) + " is outside 1.." + std::to_string(graph.size()));
    }
    for (int w : graph.descendants(v)) hit[static_cast<std::size_t>(w)] = 1;
  }
  VertexSet out;
  for (int w = 0; w < graph.size(); ++w) {
    if (hit[static_cast<std::size_t>(w)]) out.push_back(w);
  }
  return out;
}

bool VertexCycle::is_valid_in(const DirectedGraph& graph) const {
  if (vertices.empty()) return false;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(graph.size()), 0);
  for (std::size_t t = 0; t < vertices.size(); ++t) {
    const int v = vertices[t];
    if (v < 0 || v >= graph.size() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
    const int next = vertices[(t + 1) % vertices.size()];
    if (next < 0 || next >= graph.size() || !graph.has_arrow(v, next)) return false;
  }
  return true;
}

namespace {

// Walks forward from `start` along smallest-index arrows. Returns the cycle
// closed by the first repeated vertex, or nullopt if the walk hits a sink.
std::optional<VertexCycle> walk_to_cycle(const DirectedGraph& graph, int start) {
  std::vector<int> position(static_cast<std::size_t>(graph.size()), -1);
  std::vector<int> path;
  int v = start;
  while (position[static_cast<std::size_t>(v)] < 0) {
    position[static_cast<std::size_t>(v)] = static_cast<int>(path.size());
    path.push_back(v);
    const auto& next = graph.descendants(v);
    if (next.empty()) return std::nullopt;
    v = next.front();
  }
  return VertexCycle{std::vector<int>(path.begin() + position[static_cast<std::size_t>(v)], path.end())};
}

// Exhaustive search used when a forward walk runs into a sink.
std::optional<VertexCycle> dfs_cycle(const DirectedGraph& graph) {
  const int n = graph.size();
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> colour(static_cast<std::size_t>(n), kWhite);
  std::vector<int> stack;
  std::vector<std::size_t> next_child;
  for (int root = 0; root < n; ++root) {
    if (colour[static_cast<std::size_t>(root)] != kWhite) continue;
    stack = {root};
    next_child = {0};
    colour[static_cast<std::size_t>(root)] = kGrey;
    while (!stack.empty()) {
      const int v = stack.back();
      const auto& children = graph.descendants(v);
      if (next_child.back() == children.size()) {
        colour[static_cast<std::size_t>(v)] = kBlack;
        stack.pop_back();
        next_child.pop_back();
        continue;
      }
      const int w = children[next_child.back()++];
      if (colour[static_cast<std::size_t>(w)] == kGrey) {
        const auto from = std::find(stack.begin(), stack.end(), w);
        return VertexCycle{std::vector<int>(from, stack.end())};
      }
      if (colour[static_cast<std::size_t>(w)] == kWhite) {
        colour[static_cast<std::size_t>(w)] = kGrey;
        stack.push_back(w);
        next_child.push_back(0);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<VertexCycle> find_cycle(const DirectedGraph& graph) {
  if (graph.size() == 0) return std::nullopt;
  if (auto cycle = walk_to_cycle(graph, 0)) return cycle;
  return dfs_cycle(graph);
}

bool is_connected(const DirectedGraph& graph) {
  const int n = graph.size();
  if (n <= 1) return true;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if ((graph.has_arrow(v, w) || graph.has_arrow(w, v)) && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

GraphProperties graph_properties(const EvolutionAlgebra& algebra, const DirectedGraph& graph) {
  GraphProperties props;
  for (int i = 0; i < graph.size(); ++i) {
    if (graph.descendants(i).empty()) props.sinks.push_back(i);
  }
  bool zero_row = false;
  for (int i = 0; i < algebra.dimension() && !zero_row; ++i) {
    bool all_zero = true;
    for (int k = 0; k < algebra.dimension(); ++k) all_zero = all_zero && algebra.omega(i, k).is_zero();
    zero_row = all_zero;
  }
  props.non_degenerate = !zero_row;
  props.connected = is_connected(graph);
  props.cycle = find_cycle(graph);
  return props;
}

}  // namespace evoder
