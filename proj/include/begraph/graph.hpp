#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace begraph {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

// Undirected multigraph on {0..N-1}; loops and multi-edges permitted.
// max_degree is derived: the maximum over vertices of incident-edge
// multiplicity count (a loop contributes once to its vertex).
class DependencyGraph {
 public:
  DependencyGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t max_degree() const { return max_degree_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(std::uint32_t i, std::uint32_t j) const;

  static DependencyGraph empty(std::size_t n) { return DependencyGraph(n, {}); }
  // Disjoint cliques given as vertex groups.
  static DependencyGraph disjoint_cliques(std::size_t n, const std::vector<std::vector<std::uint32_t>>& groups);
  // i ~ j iff 1 <= |i-j| <= m.
  static DependencyGraph banded(std::size_t n, std::size_t m);

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::size_t max_degree_;
  std::vector<std::vector<std::uint32_t>> neighbors_;  // sorted, deduplicated
};

}  // namespace begraph
