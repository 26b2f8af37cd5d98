#include "resgraph/matching.hpp"

#include <algorithm>
#include <string>

#include "resgraph/error.hpp"

namespace resgraph {

bool Matching::contains(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }

BitSet Matching::bits(int edge_count) const {
  BitSet b(static_cast<std::size_t>(edge_count));
  for (auto e : edges) b.set(e);
  return b;
}

Matching matching_from_bits(const BitSet& bits) { return Matching{bits.to_indices()}; }

namespace {

void extend(const EmbeddedGraph& g, BitSet& uncovered, std::vector<EdgeId>& chosen, std::vector<Matching>& out) {
  const std::size_t v = uncovered.find_first();
  if (v == uncovered.size()) {
    Matching m{chosen};
    std::sort(m.edges.begin(), m.edges.end());
    out.push_back(std::move(m));
    return;
  }
  const auto vid = static_cast<VertexId>(v);
  uncovered.reset(v);
  for (auto e : g.rotation(vid)) {
    const VertexId w = g.other_end(e, vid);
    if (!uncovered.test(w)) continue;
    uncovered.reset(w);
    chosen.push_back(e);
    extend(g, uncovered, chosen, out);
    chosen.pop_back();
    uncovered.set(w);
  }
  uncovered.set(v);
}

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const EmbeddedGraph& g, const BitSet& removed) {
  BitSet uncovered(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!removed.test(v)) uncovered.set(v);
  std::vector<Matching> out;
  if (uncovered.count() % 2 != 0) return out;
  std::vector<EdgeId> chosen;
  extend(g, uncovered, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matching> enumerate_perfect_matchings(const EmbeddedGraph& g) {
  return enumerate_perfect_matchings(g, BitSet(static_cast<std::size_t>(g.vertex_count())));
}

std::uint64_t MatchingCounter::count(const BitSet& removed) {
  BitSet uncovered(static_cast<std::size_t>(g_.vertex_count()));
  for (VertexId v = 0; v < g_.vertex_count(); ++v)
    if (!removed.test(v)) uncovered.set(v);
  if (uncovered.count() % 2 != 0) return 0;
  return count_uncovered(uncovered);
}

std::uint64_t MatchingCounter::count_uncovered(const BitSet& uncovered) {
  const std::size_t v = uncovered.find_first();
  if (v == uncovered.size()) return 1;
  if (auto it = memo_.find(uncovered); it != memo_.end()) return it->second;
  const auto vid = static_cast<VertexId>(v);
  std::uint64_t total = 0;
  BitSet rest = uncovered;
  rest.reset(v);
  for (auto e : g_.rotation(vid)) {
    const VertexId w = g_.other_end(e, vid);
    if (!rest.test(w)) continue;
    rest.reset(w);
    total += count_uncovered(rest);
    rest.set(w);
  }
  memo_.emplace(uncovered, total);
  return total;
}

bool is_alternating_face(const EmbeddedGraph& g, const Matching& m, const Face& f) {
  (void)g;
  if (!f.is_cycle) throw Error(ErrorCode::NotACycleBoundary, "face " + std::to_string(f.id));
  const std::size_t n = f.boundary.size();
  if (n % 2 != 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const bool here = m.contains(f.boundary[i].edge);
    const bool next = m.contains(f.boundary[(i + 1) % n].edge);
    if (here == next) return false;
  }
  return true;
}

Matching rotate_face(const EmbeddedGraph& g, const Matching& m, const Face& f) {
  if (!is_alternating_face(g, m, f))
    throw Error(ErrorCode::NotAlternating, "face " + std::to_string(f.id) + " is not alternating");
  return matching_from_bits(m.bits(g.edge_count()) ^ g.face_edge_bits(f.id));
}

}  // namespace resgraph
