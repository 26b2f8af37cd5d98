#pragma once
// Brute-force reference implementations used only by the tests. They work on
// plain edge lists and edge-id sets and share no algorithm with the library:
// matchings come from edge-subset search in edge-id order, resonance edges
// from all matching pairs, polynomials from subset enumeration, and metric
// properties straight from the definitions over a distance table.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <compare>
#include <utility>
#include <vector>

#include "resgraph/embedded_graph.hpp"

namespace oracle {

using EdgeSet = std::vector<int>;  // sorted edge ids

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

inline Graph plain(const resgraph::EmbeddedGraph& g) {
  Graph out{g.vertex_count(), {}};
  for (const auto& e : g.edges()) out.edges.emplace_back(e.u, e.v);
  return out;
}

/// Every perfect matching of the subgraph on the vertices not in `removed`,
/// found by choosing edges in increasing id order.
inline std::vector<EdgeSet> perfect_matchings(const Graph& g, const std::vector<bool>& removed = {}) {
  std::vector<EdgeSet> out;
  std::vector<bool> gone = removed.empty() ? std::vector<bool>(g.n, false) : removed;
  const int live = static_cast<int>(std::count(gone.begin(), gone.end(), false));
  if (live % 2) return out;
  std::vector<bool> used(g.n, false);
  EdgeSet chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    if (static_cast<int>(chosen.size()) * 2 == live) {
      out.push_back(chosen);
      return;
    }
    // remaining edges must still be able to cover the remaining vertices
    if (g.edges.size() - next < static_cast<std::size_t>(live / 2) - chosen.size()) return;
    for (std::size_t e = next; e < g.edges.size(); ++e) {
      const auto [u, v] = g.edges[e];
      if (gone[u] || gone[v] || used[u] || used[v]) continue;
      used[u] = used[v] = true;
      chosen.push_back(static_cast<int>(e));
      rec(e + 1);
      chosen.pop_back();
      used[u] = used[v] = false;
    }
  };
  rec(0);
  // a selection of live/2 disjoint edges always covers every live vertex
  std::sort(out.begin(), out.end());
  return out;
}

inline EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct LabeledEdge {
  int a, b, face;
  friend auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

/// All pairs (i < j) whose symmetric difference is E(f) for some f in F; the
/// smallest such face labels the pair.
inline std::vector<LabeledEdge> resonance_edges(const std::vector<EdgeSet>& matchings,
                                                const std::vector<EdgeSet>& face_edges,
                                                const std::vector<int>& face_set) {
  std::vector<LabeledEdge> out;
  for (std::size_t i = 0; i < matchings.size(); ++i)
    for (std::size_t j = i + 1; j < matchings.size(); ++j) {
      const auto d = symmetric_difference(matchings[i], matchings[j]);
      for (int f : face_set) {
        if (face_edges[f] == d) {
          out.push_back({static_cast<int>(i), static_cast<int>(j), f});
          break;
        }
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Adjacency lists of an undirected graph on 0..n-1.
using Adjacency = std::vector<std::vector<int>>;

inline Adjacency adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
  Adjacency adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

inline std::vector<std::vector<int>> distance_table(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::deque<int> q{s};
    d[s][s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : adj[v])
        if (d[s][w] < 0) d[s][w] = d[s][v] + 1, q.push_back(w);
    }
  }
  return d;
}

inline int component_count(const Adjacency& adj) {
  const auto d = distance_table(adj);
  std::set<int> roots;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    int root = static_cast<int>(v);
    for (std::size_t u = 0; u < v; ++u)
      if (d[v][u] >= 0) root = std::min(root, static_cast<int>(u));
    roots.insert(root);
  }
  return static_cast<int>(roots.size());
}

inline bool is_bipartite(const Adjacency& adj) {
  // an odd closed walk exists iff some edge joins two vertices at equal
  // distance from a common root
  const auto d = distance_table(adj);
  for (std::size_t v = 0; v < adj.size(); ++v)
    for (int w : adj[v])
      for (std::size_t s = 0; s < adj.size(); ++s)
        if (d[s][v] >= 0 && d[s][v] == d[s][w]) return false;
  return true;
}

/// Zhang-Zhang coefficients: every subset of F, kept when its faces are
/// pairwise vertex-disjoint, weighted by the matchings of what remains.
inline std::vector<std::uint64_t> zz_polynomial(const resgraph::EmbeddedGraph& g, const std::vector<int>& face_set) {
  const Graph pg = plain(g);
  std::vector<std::uint64_t> coeffs;
  const std::size_t k = face_set.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<bool> removed(g.vertex_count(), false);
    bool disjoint = true;
    int faces = 0;
    for (std::size_t i = 0; i < k && disjoint; ++i) {
      if (!(mask >> i & 1)) continue;
      ++faces;
      for (int v : g.face(face_set[i]).vertices) {
        if (removed[v]) disjoint = false;
        removed[v] = true;
      }
    }
    if (!disjoint) continue;
    const auto count = perfect_matchings(pg, removed).size();
    if (coeffs.size() <= static_cast<std::size_t>(faces)) coeffs.resize(faces + 1, 0);
    coeffs[faces] += count;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

/// Backtracking isomorphism test between the subgraph induced on `vertices`
/// and Q_k (vertex x adjacent to x ^ (1 << i)).
inline bool induces_hypercube(const Adjacency& adj, const std::vector<int>& vertices, int k) {
  const int n = 1 << k;
  if (static_cast<int>(vertices.size()) != n) return false;
  auto adjacent = [&](int a, int b) { return std::binary_search(adj[a].begin(), adj[a].end(), b); };
  std::vector<int> image(n, -1);  // cube label -> graph vertex
  std::vector<bool> used(vertices.size(), false);
  std::function<bool(int)> place = [&](int label) {
    if (label == n) return true;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (used[i]) continue;
      bool ok = true;
      for (int prev = 0; prev < label && ok; ++prev) {
        const bool cube_edge = std::popcount(static_cast<unsigned>(prev ^ label)) == 1;
        ok = cube_edge == adjacent(image[prev], vertices[i]);
      }
      if (!ok) continue;
      used[i] = true;
      image[label] = vertices[i];
      if (place(label + 1)) return true;
      used[i] = false;
    }
    return false;
  };
  return place(0);
}

/// Cube polynomial by testing every vertex subset of size 2^k. Only for
/// small graphs.
inline std::vector<std::uint64_t> cube_polynomial(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::uint64_t> coeffs;
  for (int k = 0; (1 << k) <= n; ++k) {
    const int size = 1 << k;
    std::uint64_t count = 0;
    std::vector<int> pick(size);
    std::function<void(int, int)> rec = [&](int pos, int from) {
      if (pos == size) {
        count += induces_hypercube(adj, pick, k);
        return;
      }
      for (int v = from; v <= n - (size - pos); ++v) {
        pick[pos] = v;
        rec(pos + 1, v + 1);
      }
    };
    rec(0, 0);
    coeffs.push_back(count);
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

/// Median graph straight from the definition: every triple has exactly one
/// vertex lying on shortest paths between each pair.
inline bool is_median(const Adjacency& adj) {
  const auto d = distance_table(adj);
  const int n = static_cast<int>(adj.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        int medians = 0;
        for (int m = 0; m < n; ++m)
          medians += d[a][m] + d[m][b] == d[a][b] && d[b][m] + d[m][c] == d[b][c] && d[a][m] + d[m][c] == d[a][c];
        if (medians != 1) return false;
      }
  return true;
}

/// Partial cube via convexity of half-spaces: a connected bipartite graph is
/// a partial cube iff for every edge uv the set W_uv of vertices closer to u
/// than to v is convex.
inline bool is_partial_cube(const Adjacency& adj) {
  if (!is_bipartite(adj)) return false;
  const auto d = distance_table(adj);
  const int n = static_cast<int>(adj.size());
  for (int u = 0; u < n; ++u)
    for (int v : adj[u]) {
      std::vector<bool> in(n);
      for (int w = 0; w < n; ++w) in[w] = d[w][u] < d[w][v];
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          if (!in[x] || !in[y]) continue;
          for (int z = 0; z < n; ++z)
            if (d[x][z] + d[z][y] == d[x][y] && !in[z]) return false;
        }
    }
  return true;
}

/// Faces of an all-positive (orientable) embedding by the classic dart
/// permutation: after arriving at w along e, leave along the rotation
/// successor of e at w. Returns the number of faces.
inline int orientable_face_count(const resgraph::EmbeddedGraph& g) {
  const int m = g.edge_count();
  std::vector<bool> seen(2 * m, false);  // dart 2e = u->v, 2e+1 = v->u
  int faces = 0;
  for (int start = 0; start < 2 * m; ++start) {
    if (seen[start]) continue;
    ++faces;
    int dart = start;
    while (!seen[dart]) {
      seen[dart] = true;
      const int e = dart / 2;
      const int head = dart % 2 == 0 ? g.edge(e).v : g.edge(e).u;
      const auto rot = g.rotation(head);
      const auto pos = std::find(rot.begin(), rot.end(), e) - rot.begin();
      const int next = rot[(pos + 1) % rot.size()];
      dart = 2 * next + (g.edge(next).u == head ? 0 : 1);
    }
  }
  return faces;
}

}  // namespace oracle
