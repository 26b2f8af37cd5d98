#include "resgraph/polynomials.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "resgraph/error.hpp"

namespace resgraph {

IntegerPolynomial::IntegerPolynomial(std::vector<std::uint64_t> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntegerPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || coeffs_[i] != 1) out += std::to_string(coeffs_[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

// Walks k-subsets (or all subsets when k < 0) of pairwise vertex-disjoint
// faces of F in lexicographic order.
template <typename Visit>
void for_each_disjoint_face_set(const EmbeddedGraph& g, const EvenFaceSet& faces, int k, Visit&& visit) {
  const auto& ids = faces.ids();
  std::vector<FaceId> chosen;
  BitSet used(static_cast<std::size_t>(g.vertex_count()));
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    if (k < 0 || static_cast<int>(chosen.size()) == k) {
      visit(chosen, used);
      if (k >= 0) return;
    }
    for (std::size_t i = from; i < ids.size(); ++i) {
      const auto& fv = g.face_vertex_bits(ids[i]);
      if (used.intersects(fv)) continue;
      chosen.push_back(ids[i]);
      used |= fv;
      self(self, i + 1);
      used ^= fv;
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
}

}  // namespace

IntegerPolynomial zz_polynomial(const EmbeddedGraph& g, const EvenFaceSet& faces) {
  MatchingCounter counter(g);
  std::vector<std::uint64_t> z;
  for_each_disjoint_face_set(g, faces, -1, [&](const std::vector<FaceId>& chosen, const BitSet& removed) {
    if (z.size() <= chosen.size()) z.resize(chosen.size() + 1, 0);
    z[chosen.size()] += counter.count(removed);
  });
  return IntegerPolynomial(std::move(z));
}

std::vector<ClarCover> enumerate_clar_covers(const EmbeddedGraph& g, const EvenFaceSet& faces, int k) {
  std::vector<ClarCover> out;
  if (k < 0 || k > static_cast<int>(faces.size())) return out;
  for_each_disjoint_face_set(g, faces, k, [&](const std::vector<FaceId>& chosen, const BitSet& removed) {
    for (auto& m : enumerate_perfect_matchings(g, removed)) out.push_back({chosen, std::move(m.edges)});
  });
  return out;
}

namespace {

// Q_k with coordinates: corner[p] is the vertex at bit pattern p.
using Corners = std::vector<int>;

std::size_t edges_within(const SimpleGraph& g, const std::vector<int>& sorted_vertices) {
  std::size_t count = 0;
  for (int v : sorted_vertices)
    for (int w : g.neighbors(v))
      if (v < w && std::binary_search(sorted_vertices.begin(), sorted_vertices.end(), w)) ++count;
  return count;
}

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// All translates of `base` reachable along one new direction, as corner
// arrays of the doubled cube.
void extend_cube(const SimpleGraph& g, const Corners& base, std::vector<char>& taken,
                 std::vector<Corners>& found) {
  const std::size_t half = base.size();
  Corners shifted(half, -1);
  auto place = [&](auto&& self, std::size_t p) -> void {
    if (p == half) {
      Corners joined(base);
      joined.insert(joined.end(), shifted.begin(), shifted.end());
      found.push_back(std::move(joined));
      return;
    }
    for (int cand : g.neighbors(base[p])) {
      if (taken[cand]) continue;
      bool ok = true;
      for (std::size_t bit = 1; bit < half && ok; bit <<= 1)
        if ((p & bit) && !g.has_edge(cand, shifted[p ^ bit])) ok = false;
      if (!ok) continue;
      shifted[p] = cand;
      taken[cand] = 1;
      self(self, p + 1);
      taken[cand] = 0;
    }
    shifted[p] = -1;
  };
  for (int v : base) taken[v] = 1;
  place(place, 0);
  for (int v : base) taken[v] = 0;
}

std::vector<std::vector<Corners>> cube_levels(const SimpleGraph& g, int max_k) {
  std::vector<std::vector<Corners>> levels;
  std::vector<Corners> current;
  for (int v = 0; v < g.vertex_count(); ++v) current.push_back({v});
  std::vector<char> taken(g.vertex_count(), 0);
  int k = 0;
  while (!current.empty()) {
    levels.push_back(current);
    if (max_k >= 0 && k == max_k) break;
    std::vector<Corners> next;
    std::unordered_set<std::vector<int>, VectorHash> seen;
    const std::size_t want_edges = static_cast<std::size_t>(k + 1) << k;
    for (const auto& base : current) {
      std::vector<Corners> found;
      extend_cube(g, base, taken, found);
      for (auto& corners : found) {
        std::vector<int> key(corners);
        std::sort(key.begin(), key.end());
        if (seen.contains(key)) continue;
        if (edges_within(g, key) != want_edges) continue;
        seen.insert(std::move(key));
        next.push_back(std::move(corners));
      }
    }
    current = std::move(next);
    ++k;
  }
  return levels;
}

std::vector<CubeSubgraph> to_subgraphs(const std::vector<Corners>& level, int k) {
  std::vector<CubeSubgraph> out;
  out.reserve(level.size());
  for (const auto& corners : level) {
    CubeSubgraph c{corners, k};
    std::sort(c.vertices.begin(), c.vertices.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<CubeSubgraph> enumerate_induced_hypercubes(const SimpleGraph& g, int k) {
  if (k < 0) return {};
  const auto levels = cube_levels(g, k);
  if (static_cast<int>(levels.size()) <= k) return {};
  return to_subgraphs(levels[k], k);
}

std::vector<CubeSubgraph> enumerate_induced_hypercubes(const ResonanceGraph& r, int k) {
  return enumerate_induced_hypercubes(r.as_simple_graph(), k);
}

std::vector<std::vector<CubeSubgraph>> enumerate_all_induced_hypercubes(const SimpleGraph& g) {
  const auto levels = cube_levels(g, -1);
  std::vector<std::vector<CubeSubgraph>> out;
  for (std::size_t k = 0; k < levels.size(); ++k) out.push_back(to_subgraphs(levels[k], static_cast<int>(k)));
  return out;
}

IntegerPolynomial cube_polynomial(const SimpleGraph& g) {
  const auto levels = cube_levels(g, -1);
  std::vector<std::uint64_t> alpha;
  for (const auto& level : levels) alpha.push_back(level.size());
  return IntegerPolynomial(std::move(alpha));
}

IntegerPolynomial cube_polynomial(const ResonanceGraph& r) { return cube_polynomial(r.as_simple_graph()); }

bool induces_hypercube(const SimpleGraph& g, const std::vector<int>& vertices, int k) {
  if (k < 0 || k > 30 || vertices.size() != (std::size_t{1} << k)) return false;
  std::vector<int> sorted(vertices);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  const SimpleGraph sub = g.induced(sorted);
  const int n = sub.vertex_count();
  if (sub.edge_count() != (static_cast<std::size_t>(k) << k) / 2) return false;
  // Fix the coordinates of vertex 0 and its neighbors; every other label is forced.
  if (static_cast<int>(sub.neighbors(0).size()) != k) return false;
  std::vector<int> label(n, -1), dist = sub.distances_from(0);
  label[0] = 0;
  for (int i = 0; i < k; ++i) label[sub.neighbors(0)[i]] = 1 << i;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] < dist[b]; });
  for (int v : order) {
    if (dist[v] < 0) return false;
    if (dist[v] < 2) continue;
    int acc = 0;
    for (int w : sub.neighbors(v))
      if (dist[w] == dist[v] - 1) acc |= label[w];
    label[v] = acc;
  }
  std::vector<char> hit(n, 0);
  for (int v = 0; v < n; ++v) {
    if (label[v] < 0 || label[v] >= n || hit[label[v]]) return false;
    hit[label[v]] = 1;
  }
  for (int v = 0; v < n; ++v)
    for (int w : sub.neighbors(v))
      if (std::popcount(static_cast<unsigned>(label[v] ^ label[w])) != 1) return false;
  return true;
}

CubeSubgraph mk_map(const EmbeddedGraph& g, const ResonanceGraph& r, const ClarCover& s) {
  CubeSubgraph image;
  image.dimension = static_cast<int>(s.faces.size());
  for (MatchingId m = 0; m < r.vertex_count(); ++m) {
    const auto& bits = r.matching_bits(m);
    bool ok = std::all_of(s.edges.begin(), s.edges.end(), [&](EdgeId e) { return bits.test(e); });
    for (std::size_t i = 0; ok && i < s.faces.size(); ++i) ok = is_alternating_face(g, r.matching(m), g.face(s.faces[i]));
    if (ok) image.vertices.push_back(m);
  }
  return image;
}

bool cover_coordinates_form_cube(const EmbeddedGraph& g, const ResonanceGraph& r, const ClarCover& s,
                                 const CubeSubgraph& image) {
  const std::size_t k = s.faces.size();
  if (image.vertices.size() != (std::size_t{1} << k)) return false;
  std::vector<std::uint32_t> coord;
  std::set<std::uint32_t> distinct;
  for (MatchingId m : image.vertices) {
    std::uint32_t b = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (!r.matching_bits(m).test(g.face(s.faces[i]).boundary.front().edge)) b |= 1U << i;
    coord.push_back(b);
    distinct.insert(b);
  }
  if (distinct.size() != image.vertices.size()) return false;
  for (std::size_t x = 0; x < image.vertices.size(); ++x)
    for (std::size_t y = x + 1; y < image.vertices.size(); ++y) {
      const bool adjacent = r.edge_between(image.vertices[x], image.vertices[y]).has_value();
      if (adjacent != (std::popcount(coord[x] ^ coord[y]) == 1)) return false;
    }
  return true;
}

bool EquivalenceReport::bijective() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeBijection& d) { return d.bijective(); });
}

EquivalenceReport check_equivalence(const EmbeddedGraph& g, const EvenFaceSet& faces, const ResonanceGraph& r) {
  EquivalenceReport report;
  report.hypothesis_holds = faces.is_proper_subset();
  report.zz = zz_polynomial(g, faces);
  const SimpleGraph rg = r.as_simple_graph();
  const auto levels = enumerate_all_induced_hypercubes(rg);
  {
    std::vector<std::uint64_t> alpha;
    for (const auto& level : levels) alpha.push_back(level.size());
    report.cube = IntegerPolynomial(std::move(alpha));
  }
  report.equal = report.zz == report.cube;

  const int top = std::max(report.zz.degree(), static_cast<int>(levels.size()) - 1);
  for (int k = 0; k <= top; ++k) {
    DegreeBijection d;
    d.k = k;
    const auto covers = enumerate_clar_covers(g, faces, k);
    static const std::vector<CubeSubgraph> none;
    const auto& cubes = k < static_cast<int>(levels.size()) ? levels[k] : none;
    d.covers = covers.size();
    d.cubes = cubes.size();

    std::map<std::vector<int>, std::size_t> image_of;  // vertex set -> cover index
    std::map<ClarCover, std::vector<int>> cover_image;
    for (std::size_t i = 0; i < covers.size(); ++i) {
      const auto image = mk_map(g, r, covers[i]);
      if (!induces_hypercube(rg, image.vertices, k) || !cover_coordinates_form_cube(g, r, covers[i], image))
        d.images_are_cubes = false;
      if (!image_of.emplace(image.vertices, i).second) d.injective = false;
      cover_image.emplace(covers[i], image.vertices);
    }

    for (const auto& q : cubes) {
      const MatchingId origin = q.vertices.front();
      ClarCover s;
      BitSet covered(static_cast<std::size_t>(g.vertex_count()));
      BitSet face_edges(static_cast<std::size_t>(g.edge_count()));
      for (const auto& inc : r.incident(origin)) {
        if (!std::binary_search(q.vertices.begin(), q.vertices.end(), inc.neighbor)) continue;
        const FaceId f = r.edges()[inc.edge].face;
        if (covered.intersects(g.face_vertex_bits(f))) d.faces_disjoint = false;
        covered |= g.face_vertex_bits(f);
        face_edges |= g.face_edge_bits(f);
        s.faces.push_back(f);
      }
      std::sort(s.faces.begin(), s.faces.end());
      s.edges = (r.matching_bits(origin) & (r.matching_bits(origin) ^ face_edges)).to_indices();
      const auto it = cover_image.find(s);
      if (static_cast<int>(s.faces.size()) != k || it == cover_image.end() || it->second != q.vertices)
        d.surjective = false;
    }
    report.degrees.push_back(d);
  }
  return report;
}

EquivalenceReport check_equivalence(const EmbeddedGraph& g, const EvenFaceSet& faces) {
  return check_equivalence(g, faces, build_resonance_graph(g, faces));
}

FourCycleReport check_4cycle_lemma(const EmbeddedGraph& g, const EvenFaceSet& faces, const ResonanceGraph& r) {
  (void)faces;
  FourCycleReport report;
  const SimpleGraph rg = r.as_simple_graph();
  auto face_of = [&](MatchingId a, MatchingId b) { return r.edges()[*r.edge_between(a, b)].face; };
  for (int a = 0; a < rg.vertex_count(); ++a) {
    const auto na = rg.neighbors(a);
    for (std::size_t i = 0; i < na.size(); ++i) {
      const int b = na[i];
      if (b < a) continue;
      for (std::size_t j = i + 1; j < na.size(); ++j) {
        const int c = na[j];
        for (int d : rg.neighbors(b)) {
          if (d <= a || d == c || !rg.has_edge(c, d)) continue;
          ++report.cycles;
          FourCycle cyc;
          cyc.vertices = {a, b, d, c};
          cyc.faces = {face_of(a, b), face_of(b, d), face_of(d, c), face_of(c, a)};
          cyc.opposite_equal = cyc.faces[0] == cyc.faces[2] && cyc.faces[1] == cyc.faces[3];
          cyc.disjoint = !g.face_vertex_bits(cyc.faces[0]).intersects(g.face_vertex_bits(cyc.faces[3]));
          if (!cyc.opposite_equal || !cyc.disjoint) report.violations.push_back(cyc);
        }
      }
    }
  }
  return report;
}

}  // namespace resgraph
