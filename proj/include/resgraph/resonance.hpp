#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "resgraph/bitset.hpp"
#include "resgraph/embedded_graph.hpp"
#include "resgraph/matching.hpp"
#include "resgraph/simple_graph.hpp"

namespace resgraph {

using MatchingId = int;

struct ResonanceEdge {
  MatchingId a = 0;  // a < b
  MatchingId b = 0;
  FaceId face = 0;

  friend bool operator==(const ResonanceEdge&, const ResonanceEdge&) = default;
};

/// R(G;F): perfect matchings of G, adjacent when their symmetric difference
/// is the edge set of a face in F. Vertex ids index the canonical matching
/// order of enumerate_perfect_matchings.
class ResonanceGraph {
 public:
  struct Incidence {
    MatchingId neighbor;
    int edge;  // index into edges()
  };

  int vertex_count() const { return static_cast<int>(matchings_.size()); }
  const std::vector<Matching>& matchings() const { return matchings_; }
  const Matching& matching(MatchingId m) const { return matchings_[m]; }
  const BitSet& matching_bits(MatchingId m) const { return bits_[m]; }
  const std::vector<ResonanceEdge>& edges() const { return edges_; }
  std::span<const Incidence> incident(MatchingId m) const { return incidence_[m]; }
  const EvenFaceSet& face_set() const { return face_set_; }

  std::optional<int> edge_between(MatchingId a, MatchingId b) const;
  std::optional<MatchingId> find(const BitSet& matching_bits) const;

  SimpleGraph as_simple_graph() const;

 private:
  friend ResonanceGraph build_resonance_graph(const EmbeddedGraph& g, const EvenFaceSet& faces);

  std::vector<Matching> matchings_;
  std::vector<BitSet> bits_;
  std::unordered_map<BitSet, MatchingId, BitSetHash> index_;
  std::vector<ResonanceEdge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
  EvenFaceSet face_set_;
};

/// Iterates (matching, face) pairs and looks up m xor E(f). When two faces of
/// F have the same edge set the pair is labeled with the smaller face id.
ResonanceGraph build_resonance_graph(const EmbeddedGraph& g, const EvenFaceSet& faces);

/// Connected component H with its face classes E_i.
struct Component {
  int id = 0;
  std::vector<MatchingId> vertices;            // sorted
  std::vector<int> edges;                      // indices into ResonanceGraph::edges(), sorted
  std::vector<FaceId> faces;                   // f_1..f_k, sorted by face id
  std::map<FaceId, std::vector<int>> classes;  // face -> its edges E_i

  int local_index(MatchingId m) const;  // position in `vertices`, -1 if absent
  int face_index(FaceId f) const;       // position in `faces`, -1 if absent
  std::size_t size() const { return vertices.size(); }
};

/// Components in order of least matching id.
std::vector<Component> components(const ResonanceGraph& r);

/// Component as a graph on local indices 0..|H|-1.
SimpleGraph component_graph(const ResonanceGraph& r, const Component& h);

/// Face label multiplicities along a closed walk v0 v1 ... v(t-1) v0 that is a
/// cycle of r. Throws NotACycle.
std::map<FaceId, int> check_cycle_face_parity(const ResonanceGraph& r, std::span<const MatchingId> cycle);

/// One cycle per non-tree edge of a BFS spanning tree of h.
std::vector<std::vector<MatchingId>> fundamental_cycles(const ResonanceGraph& r, const Component& h);

/// Vertex sets of the components of H \ E_i, ordered by least vertex.
/// Throws UnknownFaceClass.
std::vector<std::vector<MatchingId>> delete_class_components(const ResonanceGraph& r, const Component& h, FaceId face);

struct QuotientGraph {
  FaceId face = 0;
  std::vector<std::vector<MatchingId>> nodes;  // components of H \ E_i
  std::vector<std::pair<int, int>> edges;      // merged, sorted, no loops
  int suppressed_loops = 0;                    // E_i edges inside one node
  bool bipartite = false;
  std::vector<int> side;  // 0 = A (holds node 0), 1 = B; empty when not bipartite

  int node_of(MatchingId m) const;
};

/// Contract H \ E_i and 2-color. Throws UnknownFaceClass. A non-bipartite
/// quotient is reported through `bipartite`; compute_labeling rejects it.
QuotientGraph quotient_graph(const ResonanceGraph& r, const Component& h, FaceId face);

/// Graphviz text, edges labeled with face ids.
std::string to_dot(const ResonanceGraph& r);

}  // namespace resgraph
