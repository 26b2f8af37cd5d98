#pragma once

#include <optional>
#include <vector>

#include "resgraph/bitset.hpp"
#include "resgraph/embedded_graph.hpp"
#include "resgraph/resonance.hpp"
#include "resgraph/simple_graph.hpp"

namespace resgraph {

/// Binary labeling of one component: bit i of a vertex says on which side of
/// the quotient for face coordinates[i] its class-deleted part lies.
struct CubeLabeling {
  int component = 0;
  std::vector<FaceId> coordinates;  // the component's faces, in bit order
  std::vector<BitSet> labels;       // indexed like Component::vertices

  int dimension() const { return static_cast<int>(coordinates.size()); }
};

/// Throws NonBipartiteQuotient when some quotient fails to 2-color.
CubeLabeling compute_labeling(const ResonanceGraph& r, const Component& h);

struct EmbeddingCheck {
  bool injective = true;
  bool one_bit_edges = true;  // Hamming 1, differing bit = the edge's face coordinate
  bool induced = true;        // Hamming-1 pairs are edges

  bool passed() const { return injective && one_bit_edges && induced; }
};

EmbeddingCheck verify_induced_embedding(const ResonanceGraph& r, const Component& h, const CubeLabeling& lab);

struct PairWitness {
  MatchingId u = 0;
  MatchingId v = 0;
  int distance = 0;
  int hamming = 0;
};

struct IsometryCheck {
  bool isometric = true;
  std::optional<PairWitness> witness;  // least violating pair (u < v)
  std::optional<PairWitness> widest;   // largest distance - hamming gap, least pair on ties
  std::size_t violating_pairs = 0;
};

IsometryCheck is_isometric_labeling(const ResonanceGraph& r, const Component& h, const CubeLabeling& lab);

/// Bipartite and the Djokovic-Winkler relation is transitive. `g` must be
/// connected.
bool is_partial_cube(const SimpleGraph& g);

struct TripleWitness {
  int a = 0;
  int b = 0;
  int c = 0;
  int medians = 0;
};

struct MedianCheck {
  bool median = true;
  std::optional<TripleWitness> witness;  // least triple a < b < c without a unique median
};

/// Brute force over all triples with a precomputed interval table. `g` must
/// be connected.
MedianCheck is_median_graph(const SimpleGraph& g);

struct FaceSubgraphCheck {
  std::vector<VertexId> vertices;  // V(G_H)
  std::vector<EdgeId> edges;       // edges of G induced on V(G_H)
  bool passes = true;
  std::optional<MatchingId> failing;
};

/// G_H is induced by the vertices of the component's faces; checks that every
/// matching of the component restricts to a perfect matching of G_H.
FaceSubgraphCheck component_face_subgraph(const EmbeddedGraph& g, const ResonanceGraph& r, const Component& h);

}  // namespace resgraph
