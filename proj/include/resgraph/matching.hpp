#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "resgraph/bitset.hpp"
#include "resgraph/embedded_graph.hpp"

namespace resgraph {

/// A perfect matching stored as its sorted edge ids.
struct Matching {
  std::vector<EdgeId> edges;

  bool contains(EdgeId e) const;
  BitSet bits(int edge_count) const;

  friend auto operator<=>(const Matching&, const Matching&) = default;
};

Matching matching_from_bits(const BitSet& bits);

/// Every perfect matching of `g` once, in lexicographic order of the sorted
/// edge-id lists. Empty when the vertex count is odd or none exists.
std::vector<Matching> enumerate_perfect_matchings(const EmbeddedGraph& g);

/// Perfect matchings of g - removed, same order as above.
std::vector<Matching> enumerate_perfect_matchings(const EmbeddedGraph& g, const BitSet& removed);

/// Counts perfect matchings of vertex-deleted subgraphs of one graph,
/// memoizing on the set of uncovered vertices.
class MatchingCounter {
 public:
  explicit MatchingCounter(const EmbeddedGraph& g) : g_(g) {}

  std::uint64_t count(const BitSet& removed);
  std::uint64_t count() { return count(BitSet(static_cast<std::size_t>(g_.vertex_count()))); }

 private:
  std::uint64_t count_uncovered(const BitSet& uncovered);

  const EmbeddedGraph& g_;
  std::unordered_map<BitSet, std::uint64_t, BitSetHash> memo_;
};

/// True iff the edges around the boundary of `f` alternate in and out of `m`.
/// Throws NotACycleBoundary when `f` is not bounded by a cycle.
bool is_alternating_face(const EmbeddedGraph& g, const Matching& m, const Face& f);

/// m xor E(f). Throws NotAlternating.
Matching rotate_face(const EmbeddedGraph& g, const Matching& m, const Face& f);

}  // namespace resgraph
