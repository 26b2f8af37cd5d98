#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "resgraph/embedded_graph.hpp"
#include "resgraph/matching.hpp"
#include "resgraph/resonance.hpp"
#include "resgraph/simple_graph.hpp"

namespace resgraph {

/// Polynomial with nonnegative integer coefficients, lowest degree first,
/// trailing zeros trimmed (the zero polynomial has no coefficients).
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<std::uint64_t> coefficients);

  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
  std::uint64_t coefficient(std::size_t degree) const { return degree < coeffs_.size() ? coeffs_[degree] : 0; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  std::string to_string() const;  // e.g. "5 + 5x + x^2"

  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

 private:
  std::vector<std::uint64_t> coeffs_;
};

/// Faces from F, pairwise vertex-disjoint, plus a perfect matching of what
/// they leave uncovered.
struct ClarCover {
  std::vector<FaceId> faces;  // sorted
  std::vector<EdgeId> edges;  // sorted

  friend auto operator<=>(const ClarCover&, const ClarCover&) = default;
};

/// Vertex set inducing a hypercube of the given dimension.
struct CubeSubgraph {
  std::vector<int> vertices;  // sorted
  int dimension = 0;

  friend auto operator<=>(const CubeSubgraph&, const CubeSubgraph&) = default;
};

/// z_k = sum over k-sets of pairwise vertex-disjoint faces of F of the number
/// of perfect matchings of G minus their vertices.
IntegerPolynomial zz_polynomial(const EmbeddedGraph& g, const EvenFaceSet& faces);

/// Clar covers with exactly k faces, ordered by face ids then edges.
std::vector<ClarCover> enumerate_clar_covers(const EmbeddedGraph& g, const EvenFaceSet& faces, int k);

/// Induced Q_k subgraphs, one per vertex set, sorted. Built level by level:
/// each Q_(k+1) is a Q_k plus a translate matched to it along one direction,
/// kept only when the union induces no extra edges.
std::vector<CubeSubgraph> enumerate_induced_hypercubes(const SimpleGraph& g, int k);
std::vector<CubeSubgraph> enumerate_induced_hypercubes(const ResonanceGraph& r, int k);

/// Every level 0, 1, ... up to the last nonempty one.
std::vector<std::vector<CubeSubgraph>> enumerate_all_induced_hypercubes(const SimpleGraph& g);

IntegerPolynomial cube_polynomial(const SimpleGraph& g);
IntegerPolynomial cube_polynomial(const ResonanceGraph& r);

/// True iff `vertices` induces a graph isomorphic to Q_k.
bool induces_hypercube(const SimpleGraph& g, const std::vector<int>& vertices, int k);

/// Matchings that alternate on every face of s and contain its edges.
CubeSubgraph mk_map(const EmbeddedGraph& g, const ResonanceGraph& r, const ClarCover& s);

/// Coordinates b(M): bit i tells which of the two perfect matchings of the
/// boundary of face i of s the matching M uses. Checks that b is a graph
/// isomorphism from the induced subgraph on `image` onto Q_k.
bool cover_coordinates_form_cube(const EmbeddedGraph& g, const ResonanceGraph& r, const ClarCover& s,
                                 const CubeSubgraph& image);

struct DegreeBijection {
  int k = 0;
  std::size_t covers = 0;
  std::size_t cubes = 0;
  bool images_are_cubes = true;  // every m_k(S) is an induced Q_k with b an isomorphism
  bool injective = true;
  bool faces_disjoint = true;  // edge labels at a corner of each Q_k name disjoint faces
  bool surjective = true;      // every Q_k inverts to a cover mapping back onto it

  bool bijective() const { return images_are_cubes && injective && faces_disjoint && surjective; }
};

struct EquivalenceReport {
  IntegerPolynomial zz;
  IntegerPolynomial cube;
  bool equal = false;
  bool hypothesis_holds = true;  // F is a proper subset of all faces
  std::vector<DegreeBijection> degrees;

  bool bijective() const;
};

EquivalenceReport check_equivalence(const EmbeddedGraph& g, const EvenFaceSet& faces, const ResonanceGraph& r);
EquivalenceReport check_equivalence(const EmbeddedGraph& g, const EvenFaceSet& faces);

struct FourCycle {
  std::array<MatchingId, 4> vertices{};  // M0 M1 M2 M3, M0 the least
  std::array<FaceId, 4> faces{};         // labels of M0M1, M1M2, M2M3, M3M0
  bool opposite_equal = false;
  bool disjoint = false;  // faces of M0M1 and M0M3 share no vertex
};

struct FourCycleReport {
  std::size_t cycles = 0;
  std::vector<FourCycle> violations;

  bool passed() const { return violations.empty(); }
};

FourCycleReport check_4cycle_lemma(const EmbeddedGraph& g, const EvenFaceSet& faces, const ResonanceGraph& r);

}  // namespace resgraph
