#include "resgraph/cube_embedding.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "resgraph/error.hpp"

namespace resgraph {

CubeLabeling compute_labeling(const ResonanceGraph& r, const Component& h) {
  CubeLabeling lab;
  lab.component = h.id;
  lab.coordinates = h.faces;
  const std::size_t k = h.faces.size();
  lab.labels.assign(h.size(), BitSet(k));
  for (std::size_t i = 0; i < k; ++i) {
    const auto q = quotient_graph(r, h, h.faces[i]);
    if (!q.bipartite)
      throw Error(ErrorCode::NonBipartiteQuotient,
                  "quotient of component " + std::to_string(h.id) + " for face " + std::to_string(h.faces[i]));
    for (std::size_t node = 0; node < q.nodes.size(); ++node) {
      if (q.side[node] == 0) continue;
      for (MatchingId m : q.nodes[node]) lab.labels[h.local_index(m)].set(i);
    }
  }
  return lab;
}

EmbeddingCheck verify_induced_embedding(const ResonanceGraph& r, const Component& h, const CubeLabeling& lab) {
  EmbeddingCheck check;
  std::unordered_map<BitSet, int, BitSetHash> by_label;
  for (int v = 0; v < static_cast<int>(h.size()); ++v)
    if (!by_label.emplace(lab.labels[v], v).second) check.injective = false;

  for (int e : h.edges) {
    const auto& ed = r.edges()[e];
    const auto diff = lab.labels[h.local_index(ed.a)] ^ lab.labels[h.local_index(ed.b)];
    if (diff.count() != 1 || static_cast<int>(diff.find_first()) != h.face_index(ed.face)) check.one_bit_edges = false;
  }

  for (int v = 0; v < static_cast<int>(h.size()); ++v) {
    BitSet probe = lab.labels[v];
    for (int i = 0; i < lab.dimension(); ++i) {
      probe.flip(i);
      if (auto it = by_label.find(probe); it != by_label.end()) {
        if (!r.edge_between(h.vertices[v], h.vertices[it->second])) check.induced = false;
      }
      probe.flip(i);
    }
  }
  return check;
}

IsometryCheck is_isometric_labeling(const ResonanceGraph& r, const Component& h, const CubeLabeling& lab) {
  IsometryCheck check;
  const SimpleGraph hg = component_graph(r, h);
  const int n = hg.vertex_count();
  for (int u = 0; u < n; ++u) {
    const auto dist = hg.distances_from(u);
    for (int v = u + 1; v < n; ++v) {
      const int ham = static_cast<int>(hamming_distance(lab.labels[u], lab.labels[v]));
      if (dist[v] == ham) continue;
      ++check.violating_pairs;
      const PairWitness w{h.vertices[u], h.vertices[v], dist[v], ham};
      if (!check.witness) check.witness = w;
      if (!check.widest || w.distance - w.hamming > check.widest->distance - check.widest->hamming) check.widest = w;
    }
  }
  check.isometric = check.violating_pairs == 0;
  return check;
}

bool is_partial_cube(const SimpleGraph& g) {
  if (!g.two_coloring()) return false;
  const DistanceMatrix d(g);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : g.neighbors(v))
      if (v < w) edges.emplace_back(v, w);
  const std::size_t m = edges.size();
  auto theta = [&](std::size_t i, std::size_t j) {
    const auto [u, v] = edges[i];
    const auto [x, y] = edges[j];
    return d(u, x) + d(v, y) != d(u, y) + d(v, x);
  };

  std::vector<std::size_t> root(m);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (theta(i, j)) {
        const auto a = find(i), b = find(j);
        if (a != b) root[std::max(a, b)] = std::min(a, b);
      }
  // Transitive iff every pair inside a closure class is related directly.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (find(i) == find(j) && !theta(i, j)) return false;
  return true;
}

MedianCheck is_median_graph(const SimpleGraph& g) {
  MedianCheck check;
  const int n = g.vertex_count();
  const DistanceMatrix d(g);
  auto pair_index = [n](int a, int b) { return static_cast<std::size_t>(a) * n + b; };
  std::vector<BitSet> interval(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      BitSet s(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x)
        if (d(a, x) + d(x, b) == d(a, b)) s.set(x);
      interval[pair_index(a, b)] = std::move(s);
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto& ab = interval[pair_index(a, b)];
      for (int c = b + 1; c < n; ++c) {
        const auto medians = (ab & interval[pair_index(a, c)] & interval[pair_index(b, c)]).count();
        if (medians != 1) {
          check.median = false;
          check.witness = TripleWitness{a, b, c, static_cast<int>(medians)};
          return check;
        }
      }
    }
  return check;
}

FaceSubgraphCheck component_face_subgraph(const EmbeddedGraph& g, const ResonanceGraph& r, const Component& h) {
  FaceSubgraphCheck check;
  BitSet in_sub(static_cast<std::size_t>(g.vertex_count()));
  for (FaceId f : h.faces) in_sub |= g.face_vertex_bits(f);
  check.vertices = in_sub.to_indices();
  BitSet sub_edges(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (in_sub.test(g.edge(e).u) && in_sub.test(g.edge(e).v)) {
      check.edges.push_back(e);
      sub_edges.set(e);
    }

  for (MatchingId m : h.vertices) {
    std::vector<int> cover(g.vertex_count(), 0);
    (r.matching_bits(m) & sub_edges).for_each([&](std::size_t e) {
      ++cover[g.edge(static_cast<EdgeId>(e)).u];
      ++cover[g.edge(static_cast<EdgeId>(e)).v];
    });
    const bool perfect = std::all_of(check.vertices.begin(), check.vertices.end(), [&](int v) { return cover[v] == 1; });
    if (!perfect) {
      check.passes = false;
      check.failing = m;
      break;
    }
  }
  return check;
}

}  // namespace resgraph
