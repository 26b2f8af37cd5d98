#pragma once

#include <compare>
#include <span>
#include <vector>

#include "resgraph/bitset.hpp"

namespace resgraph {

using VertexId = int;
using EdgeId = int;
using FaceId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  int sign = +1;  // +1 or -1; -1 marks an edge whose ends are glued with a twist

  friend bool operator==(const Edge&, const Edge&) = default;
};

// One step of a face boundary walk: leave `vertex` along `edge`.
struct BoundaryStep {
  VertexId vertex = 0;
  EdgeId edge = 0;

  friend auto operator<=>(const BoundaryStep&, const BoundaryStep&) = default;
};

struct Face {
  FaceId id = 0;
  std::vector<BoundaryStep> boundary;  // canonical rotation and direction
  std::vector<EdgeId> edges;           // E(f), sorted, distinct
  std::vector<VertexId> vertices;      // sorted, distinct
  bool is_cycle = false;
  bool is_even = false;

  std::size_t length() const { return boundary.size(); }
};

/// A simple graph with a rotation system and an edge signature, i.e. a
/// cellular embedding in a closed surface (orientable when every sign is +).
///
/// Instances are immutable. Faces are traced once at construction and
/// numbered canonically, so face ids are stable across runs for equal input.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  /// Validates the input and traces faces. Throws Error with LoopEdge,
  /// ParallelEdge, RotationMismatch or InvalidInput.
  static EmbeddedGraph build(int n_vertices, std::vector<Edge> edges,
                             std::vector<std::vector<EdgeId>> rotations);

  int vertex_count() const { return n_vertices_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> rotation(VertexId v) const { return rotations_[v]; }
  const std::vector<std::vector<EdgeId>>& rotations() const { return rotations_; }
  int degree(VertexId v) const { return static_cast<int>(rotations_[v].size()); }

  VertexId other_end(EdgeId e, VertexId v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }
  EdgeId successor(VertexId v, EdgeId e) const;
  EdgeId predecessor(VertexId v, EdgeId e) const;

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_[f]; }
  const BitSet& face_edge_bits(FaceId f) const { return face_edge_bits_[f]; }
  const BitSet& face_vertex_bits(FaceId f) const { return face_vertex_bits_[f]; }

  bool is_connected() const;

  friend bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b) {
    return a.n_vertices_ == b.n_vertices_ && a.edges_ == b.edges_ && a.rotations_ == b.rotations_;
  }

 private:
  int n_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> rotations_;
  // position of edge e in the rotation of edges_[e].u and edges_[e].v
  std::vector<std::pair<int, int>> rotation_pos_;
  std::vector<Face> faces_;
  std::vector<BitSet> face_edge_bits_;
  std::vector<BitSet> face_vertex_bits_;
};

/// Traces the faces of `g` as orbits of the signed dart walk. Each geometric
/// face appears once; output is sorted by canonical boundary.
std::vector<Face> trace_faces(const EmbeddedGraph& g);

/// 2 - (V - E + F). Throws DisconnectedGraph.
int euler_genus(const EmbeddedGraph& g);

/// Ids of faces bounded by an even cycle.
std::vector<FaceId> even_faces(const EmbeddedGraph& g);

class EvenFaceSet {
 public:
  EvenFaceSet() = default;

  const std::vector<FaceId>& ids() const { return ids_; }
  bool contains(FaceId f) const { return f >= 0 && static_cast<std::size_t>(f) < member_.size() && member_.test(f); }
  bool is_proper_subset() const { return is_proper_subset_; }
  std::size_t size() const { return ids_.size(); }

 private:
  friend EvenFaceSet validate_even_face_set(const EmbeddedGraph& g, std::span<const FaceId> ids);

  std::vector<FaceId> ids_;
  BitSet member_;
  bool is_proper_subset_ = false;
};

/// Throws UnknownFaceId or NotEvenFace. Duplicate ids are collapsed.
EvenFaceSet validate_even_face_set(const EmbeddedGraph& g, std::span<const FaceId> ids);

inline EvenFaceSet validate_even_face_set(const EmbeddedGraph& g, const std::vector<FaceId>& ids) {
  return validate_even_face_set(g, std::span<const FaceId>(ids));
}

}  // namespace resgraph
