#include "resgraph/embedded_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "resgraph/error.hpp"

namespace resgraph {

namespace {

std::string edge_label(EdgeId e) { return "edge " + std::to_string(e); }

// Least rotation of a cyclic sequence.
std::vector<BoundaryStep> least_rotation(const std::vector<BoundaryStep>& seq) {
  const std::size_t n = seq.size();
  std::size_t best = 0;
  for (std::size_t start = 1; start < n; ++start) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = seq[(start + i) % n];
      const auto& b = seq[(best + i) % n];
      if (a < b) {
        best = start;
        break;
      }
      if (b < a) break;
    }
  }
  std::vector<BoundaryStep> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(seq[(best + i) % n]);
  return out;
}

// Dart-walk state: leave a vertex along an edge with a local side.
// Encoded as ((edge * 2 + direction) * 2 + side_bit); direction 0 leaves edge.u.
struct DartWalk {
  const EmbeddedGraph& g;

  static int encode(EdgeId e, int dir, int side) { return (e * 2 + dir) * 2 + (side > 0 ? 0 : 1); }
  static EdgeId edge_of(int s) { return s / 4; }
  static int dir_of(int s) { return (s / 2) % 2; }
  static int side_of(int s) { return s % 2 == 0 ? +1 : -1; }

  VertexId from(int s) const {
    const auto& ed = g.edge(edge_of(s));
    return dir_of(s) == 0 ? ed.u : ed.v;
  }
  VertexId to(int s) const {
    const auto& ed = g.edge(edge_of(s));
    return dir_of(s) == 0 ? ed.v : ed.u;
  }

  int next(int s) const {
    const EdgeId e = edge_of(s);
    const VertexId w = to(s);
    const int side = side_of(s) * g.edge(e).sign;
    const EdgeId nxt = side > 0 ? g.successor(w, e) : g.predecessor(w, e);
    const int dir = g.edge(nxt).u == w ? 0 : 1;
    return encode(nxt, dir, side);
  }

  // The same edge side walked the other way.
  int reverse(int s) const {
    const EdgeId e = edge_of(s);
    return encode(e, 1 - dir_of(s), -side_of(s) * g.edge(e).sign);
  }
};

struct TracedFace {
  std::vector<BoundaryStep> boundary;
  int tie = 0;  // least state index in the orbit pair
};

}  // namespace

EmbeddedGraph EmbeddedGraph::build(int n_vertices, std::vector<Edge> edges,
                                   std::vector<std::vector<EdgeId>> rotations) {
  if (n_vertices < 0) throw Error(ErrorCode::InvalidInput, "negative vertex count");
  if (static_cast<int>(rotations.size()) != n_vertices)
    throw Error(ErrorCode::RotationMismatch,
                "expected " + std::to_string(n_vertices) + " rotations, got " + std::to_string(rotations.size()));

  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
    const auto& ed = edges[e];
    if (ed.u < 0 || ed.u >= n_vertices || ed.v < 0 || ed.v >= n_vertices)
      throw Error(ErrorCode::InvalidInput, edge_label(e) + " has an endpoint out of range");
    if (ed.sign != 1 && ed.sign != -1) throw Error(ErrorCode::InvalidInput, edge_label(e) + " has sign other than +1/-1");
    if (ed.u == ed.v) throw Error(ErrorCode::LoopEdge, edge_label(e) + " is a loop at vertex " + std::to_string(ed.u));
    if (!seen.insert(std::minmax(ed.u, ed.v)).second)
      throw Error(ErrorCode::ParallelEdge, edge_label(e) + " duplicates an earlier edge");
  }

  std::vector<std::pair<int, int>> pos(edges.size(), {-1, -1});
  for (VertexId v = 0; v < n_vertices; ++v) {
    for (int i = 0; i < static_cast<int>(rotations[v].size()); ++i) {
      const EdgeId e = rotations[v][i];
      if (e < 0 || e >= static_cast<EdgeId>(edges.size()))
        throw Error(ErrorCode::RotationMismatch, "rotation at vertex " + std::to_string(v) + " names unknown " + edge_label(e));
      int* slot = nullptr;
      if (edges[e].u == v) slot = &pos[e].first;
      else if (edges[e].v == v) slot = &pos[e].second;
      else
        throw Error(ErrorCode::RotationMismatch,
                    "rotation at vertex " + std::to_string(v) + " lists non-incident " + edge_label(e));
      if (*slot != -1)
        throw Error(ErrorCode::RotationMismatch, "rotation at vertex " + std::to_string(v) + " repeats " + edge_label(e));
      *slot = i;
    }
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
    if (pos[e].first == -1 || pos[e].second == -1)
      throw Error(ErrorCode::RotationMismatch, edge_label(e) + " is missing from an endpoint rotation");
  }

  EmbeddedGraph g;
  g.n_vertices_ = n_vertices;
  g.edges_ = std::move(edges);
  g.rotations_ = std::move(rotations);
  g.rotation_pos_ = std::move(pos);
  g.faces_ = trace_faces(g);
  for (const auto& f : g.faces_) {
    BitSet eb(g.edges_.size());
    for (auto e : f.edges) eb.set(e);
    BitSet vb(static_cast<std::size_t>(n_vertices));
    for (auto v : f.vertices) vb.set(v);
    g.face_edge_bits_.push_back(std::move(eb));
    g.face_vertex_bits_.push_back(std::move(vb));
  }
  return g;
}

EdgeId EmbeddedGraph::successor(VertexId v, EdgeId e) const {
  const auto& rot = rotations_[v];
  const int i = edges_[e].u == v ? rotation_pos_[e].first : rotation_pos_[e].second;
  return rot[(i + 1) % rot.size()];
}

EdgeId EmbeddedGraph::predecessor(VertexId v, EdgeId e) const {
  const auto& rot = rotations_[v];
  const int i = edges_[e].u == v ? rotation_pos_[e].first : rotation_pos_[e].second;
  return rot[(i + rot.size() - 1) % rot.size()];
}

bool EmbeddedGraph::is_connected() const {
  if (n_vertices_ == 0) return true;
  std::vector<char> seen(n_vertices_, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (auto e : rotations_[v]) {
      const VertexId w = other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_vertices_;
}

std::vector<Face> trace_faces(const EmbeddedGraph& g) {
  const DartWalk walk{g};
  const int n_states = 4 * g.edge_count();
  std::vector<char> visited(n_states, 0);

  auto orbit = [&](int start) {
    std::vector<int> states;
    int s = start;
    do {
      states.push_back(s);
      visited[s] = 1;
      s = walk.next(s);
    } while (s != start);
    return states;
  };
  auto steps_of = [&](const std::vector<int>& states) {
    std::vector<BoundaryStep> seq;
    seq.reserve(states.size());
    for (int s : states) seq.push_back({walk.from(s), DartWalk::edge_of(s)});
    return least_rotation(seq);
  };

  std::vector<TracedFace> traced;
  for (int s = 0; s < n_states; ++s) {
    if (visited[s]) continue;
    auto forward = orbit(s);
    auto boundary = steps_of(forward);
    const int r = walk.reverse(s);
    if (!visited[r]) {
      auto backward = steps_of(orbit(r));
      if (backward < boundary) boundary = std::move(backward);
    }
    traced.push_back({std::move(boundary), s});
  }
  std::sort(traced.begin(), traced.end(), [](const TracedFace& a, const TracedFace& b) {
    if (a.boundary != b.boundary) return a.boundary < b.boundary;
    return a.tie < b.tie;
  });

  std::vector<Face> faces;
  faces.reserve(traced.size());
  for (auto& t : traced) {
    Face f;
    f.id = static_cast<FaceId>(faces.size());
    f.boundary = std::move(t.boundary);
    for (const auto& step : f.boundary) {
      f.edges.push_back(step.edge);
      f.vertices.push_back(step.vertex);
    }
    std::sort(f.edges.begin(), f.edges.end());
    std::sort(f.vertices.begin(), f.vertices.end());
    const bool edges_distinct = std::adjacent_find(f.edges.begin(), f.edges.end()) == f.edges.end();
    const bool vertices_distinct = std::adjacent_find(f.vertices.begin(), f.vertices.end()) == f.vertices.end();
    f.edges.erase(std::unique(f.edges.begin(), f.edges.end()), f.edges.end());
    f.vertices.erase(std::unique(f.vertices.begin(), f.vertices.end()), f.vertices.end());
    f.is_cycle = edges_distinct && vertices_distinct && f.boundary.size() >= 3;
    f.is_even = f.is_cycle && f.boundary.size() % 2 == 0;
    faces.push_back(std::move(f));
  }
  return faces;
}

int euler_genus(const EmbeddedGraph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedGraph, "Euler genus needs a connected graph");
  // A lone vertex has no darts but bounds one face.
  const int faces = g.edge_count() == 0 ? (g.vertex_count() > 0 ? 1 : 0) : g.face_count();
  return 2 - (g.vertex_count() - g.edge_count() + faces);
}

std::vector<FaceId> even_faces(const EmbeddedGraph& g) {
  std::vector<FaceId> out;
  for (const auto& f : g.faces())
    if (f.is_even) out.push_back(f.id);
  return out;
}

EvenFaceSet validate_even_face_set(const EmbeddedGraph& g, std::span<const FaceId> ids) {
  EvenFaceSet set;
  set.member_ = BitSet(static_cast<std::size_t>(g.face_count()));
  for (auto f : ids) {
    if (f < 0 || f >= g.face_count()) throw Error(ErrorCode::UnknownFaceId, "face " + std::to_string(f));
    if (!g.face(f).is_even) throw Error(ErrorCode::NotEvenFace, "face " + std::to_string(f) + " is not bounded by an even cycle");
    set.member_.set(f);
  }
  set.ids_ = set.member_.to_indices();
  set.is_proper_subset_ = static_cast<int>(set.ids_.size()) != g.face_count();
  return set;
}

}  // namespace resgraph
