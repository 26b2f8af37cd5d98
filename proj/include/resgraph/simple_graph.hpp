#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace resgraph {

// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : adj_(static_cast<std::size_t>(n)) {}
  SimpleGraph(int n, std::span<const std::pair<int, int>> edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const;

  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  std::span<const int> neighbors(int v) const { return adj_[v]; }

  std::vector<int> distances_from(int source) const;  // -1 when unreachable
  bool is_connected() const;
  std::optional<std::vector<int>> two_coloring() const;

  SimpleGraph induced(std::span<const int> vertices) const;

 private:
  std::vector<std::vector<int>> adj_;
};

SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph hypercube_graph(int k);

// All-pairs BFS distances of a connected graph, row-major.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const SimpleGraph& g);

  int size() const { return n_; }
  int operator()(int a, int b) const { return d_[static_cast<std::size_t>(a) * n_ + b]; }

 private:
  int n_ = 0;
  std::vector<int> d_;
};

}  // namespace resgraph
