#include "begraph/graph.hpp"

#include <algorithm>

#include "begraph/errors.hpp"

namespace begraph {

DependencyGraph::DependencyGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ == 0) throw InvalidInput("graph needs at least one vertex");
  std::vector<std::size_t> degree(vertex_count_, 0);
  neighbors_.assign(vertex_count_, {});
  for (const auto& [a, b] : edges_) {
    if (a >= vertex_count_ || b >= vertex_count_) throw InvalidInput("edge endpoint out of range");
    if (a == b) {
      degree[a] += 1;
    } else {
      degree[a] += 1;
      degree[b] += 1;
      neighbors_[a].push_back(b);
      neighbors_[b].push_back(a);
    }
  }
  max_degree_ = 0;
  for (std::size_t d : degree) max_degree_ = std::max(max_degree_, d);
  for (auto& nb : neighbors_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

bool DependencyGraph::adjacent(std::uint32_t i, std::uint32_t j) const {
  const auto& nb = neighbors_[i];
  return std::binary_search(nb.begin(), nb.end(), j);
}

DependencyGraph DependencyGraph::disjoint_cliques(std::size_t n, const std::vector<std::vector<std::uint32_t>>& groups) {
  std::vector<Edge> edges;
  for (const auto& g : groups)
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j) edges.emplace_back(g[i], g[j]);
  return DependencyGraph(n, std::move(edges));
}

DependencyGraph DependencyGraph::banded(std::size_t n, std::size_t m) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 1; d <= m && i + d < n; ++d) edges.emplace_back(std::uint32_t(i), std::uint32_t(i + d));
  return DependencyGraph(n, std::move(edges));
}

}  // namespace begraph
