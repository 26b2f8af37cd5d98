#include "resgraph/simple_graph.hpp"

#include <algorithm>
#include <deque>

#include "resgraph/error.hpp"

namespace resgraph {

SimpleGraph::SimpleGraph(int n, std::span<const std::pair<int, int>> edges) : adj_(static_cast<std::size_t>(n)) {
  for (const auto& [a, b] : edges) add_edge(a, b);
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adj_) total += row.size();
  return total / 2;
}

void SimpleGraph::add_edge(int a, int b) {
  if (a == b || has_edge(a, b)) return;
  adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
  adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
}

bool SimpleGraph::has_edge(int a, int b) const { return std::binary_search(adj_[a].begin(), adj_[a].end(), b); }

std::vector<int> SimpleGraph::distances_from(int source) const {
  std::vector<int> dist(adj_.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj_[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool SimpleGraph::is_connected() const {
  if (adj_.empty()) return true;
  const auto d = distances_from(0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::optional<std::vector<int>> SimpleGraph::two_coloring() const {
  std::vector<int> color(adj_.size(), -1);
  for (int s = 0; s < vertex_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : adj_[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

SimpleGraph SimpleGraph::induced(std::span<const int> vertices) const {
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  SimpleGraph sub(static_cast<int>(sorted.size()));
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    for (int w : adj_[sorted[i]]) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
      if (it != sorted.end() && *it == w) sub.add_edge(i, static_cast<int>(it - sorted.begin()));
    }
  }
  return sub;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph hypercube_graph(int k) {
  SimpleGraph g(1 << k);
  for (int v = 0; v < (1 << k); ++v)
    for (int i = 0; i < k; ++i) g.add_edge(v, v ^ (1 << i));
  return g;
}

DistanceMatrix::DistanceMatrix(const SimpleGraph& g) : n_(g.vertex_count()) {
  d_.resize(static_cast<std::size_t>(n_) * n_);
  for (int s = 0; s < n_; ++s) {
    const auto row = g.distances_from(s);
    if (std::any_of(row.begin(), row.end(), [](int x) { return x < 0; }))
      throw Error(ErrorCode::DisconnectedGraph, "distance matrix needs a connected graph");
    std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(s) * n_);
  }
}

}  // namespace resgraph
