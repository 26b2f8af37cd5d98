#include "resgraph/resonance.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "resgraph/error.hpp"

namespace resgraph {

std::optional<int> ResonanceGraph::edge_between(MatchingId a, MatchingId b) const {
  for (const auto& inc : incidence_[a])
    if (inc.neighbor == b) return inc.edge;
  return std::nullopt;
}

std::optional<MatchingId> ResonanceGraph::find(const BitSet& matching_bits) const {
  if (auto it = index_.find(matching_bits); it != index_.end()) return it->second;
  return std::nullopt;
}

SimpleGraph ResonanceGraph::as_simple_graph() const {
  SimpleGraph s(vertex_count());
  for (const auto& e : edges_) s.add_edge(e.a, e.b);
  return s;
}

namespace {

bool alternates(const Face& f, const BitSet& m) {
  const std::size_t n = f.boundary.size();
  if (n % 2 != 0) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (m.test(f.boundary[i].edge) == m.test(f.boundary[(i + 1) % n].edge)) return false;
  return true;
}

}  // namespace

ResonanceGraph build_resonance_graph(const EmbeddedGraph& g, const EvenFaceSet& faces) {
  ResonanceGraph r;
  r.face_set_ = faces;
  r.matchings_ = enumerate_perfect_matchings(g);
  const int n = r.vertex_count();
  r.bits_.reserve(n);
  for (MatchingId m = 0; m < n; ++m) {
    r.bits_.push_back(r.matchings_[m].bits(g.edge_count()));
    r.index_.emplace(r.bits_.back(), m);
  }
  r.incidence_.assign(n, {});

  std::set<std::pair<MatchingId, MatchingId>> seen;
  for (MatchingId m = 0; m < n; ++m) {
    for (FaceId f : faces.ids()) {
      if (!alternates(g.face(f), r.bits_[m])) continue;
      const auto other = r.find(r.bits_[m] ^ g.face_edge_bits(f));
      if (!other || *other < m) continue;
      if (!seen.emplace(m, *other).second) continue;
      r.edges_.push_back({m, *other, f});
    }
  }
  std::sort(r.edges_.begin(), r.edges_.end(),
            [](const ResonanceEdge& x, const ResonanceEdge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  for (int i = 0; i < static_cast<int>(r.edges_.size()); ++i) {
    r.incidence_[r.edges_[i].a].push_back({r.edges_[i].b, i});
    r.incidence_[r.edges_[i].b].push_back({r.edges_[i].a, i});
  }
  return r;
}

int Component::local_index(MatchingId m) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), m);
  return it != vertices.end() && *it == m ? static_cast<int>(it - vertices.begin()) : -1;
}

int Component::face_index(FaceId f) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), f);
  return it != faces.end() && *it == f ? static_cast<int>(it - faces.begin()) : -1;
}

std::vector<Component> components(const ResonanceGraph& r) {
  std::vector<int> comp_of(r.vertex_count(), -1);
  std::vector<Component> out;
  for (MatchingId s = 0; s < r.vertex_count(); ++s) {
    if (comp_of[s] >= 0) continue;
    Component h;
    h.id = static_cast<int>(out.size());
    std::deque<MatchingId> queue{s};
    comp_of[s] = h.id;
    while (!queue.empty()) {
      const MatchingId v = queue.front();
      queue.pop_front();
      h.vertices.push_back(v);
      for (const auto& inc : r.incident(v)) {
        if (inc.neighbor > v) h.edges.push_back(inc.edge);
        if (comp_of[inc.neighbor] < 0) {
          comp_of[inc.neighbor] = h.id;
          queue.push_back(inc.neighbor);
        }
      }
    }
    std::sort(h.vertices.begin(), h.vertices.end());
    std::sort(h.edges.begin(), h.edges.end());
    for (int e : h.edges) h.classes[r.edges()[e].face].push_back(e);
    for (const auto& [f, _] : h.classes) h.faces.push_back(f);
    out.push_back(std::move(h));
  }
  return out;
}

SimpleGraph component_graph(const ResonanceGraph& r, const Component& h) {
  SimpleGraph s(static_cast<int>(h.size()));
  for (int e : h.edges) s.add_edge(h.local_index(r.edges()[e].a), h.local_index(r.edges()[e].b));
  return s;
}

std::map<FaceId, int> check_cycle_face_parity(const ResonanceGraph& r, std::span<const MatchingId> cycle) {
  const std::size_t t = cycle.size();
  if (t < 3) throw Error(ErrorCode::NotACycle, "a cycle needs at least three vertices");
  std::set<MatchingId> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != t) throw Error(ErrorCode::NotACycle, "vertex repeated");
  std::map<FaceId, int> counts;
  for (std::size_t i = 0; i < t; ++i) {
    const MatchingId a = cycle[i];
    const MatchingId b = cycle[(i + 1) % t];
    if (a < 0 || a >= r.vertex_count() || b < 0 || b >= r.vertex_count())
      throw Error(ErrorCode::NotACycle, "vertex out of range");
    const auto e = r.edge_between(a, b);
    if (!e) throw Error(ErrorCode::NotACycle, std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
    ++counts[r.edges()[*e].face];
  }
  return counts;
}

std::vector<std::vector<MatchingId>> fundamental_cycles(const ResonanceGraph& r, const Component& h) {
  std::vector<std::vector<MatchingId>> cycles;
  if (h.vertices.empty()) return cycles;
  const int n = static_cast<int>(h.size());
  std::vector<int> parent(n, -1), depth(n, -1), parent_edge(n, -1);
  std::deque<int> queue{0};
  depth[0] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& inc : r.incident(h.vertices[v])) {
      const int w = h.local_index(inc.neighbor);
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        parent[w] = v;
        parent_edge[w] = inc.edge;
        queue.push_back(w);
      }
    }
  }
  for (int e : h.edges) {
    int a = h.local_index(r.edges()[e].a);
    int b = h.local_index(r.edges()[e].b);
    if (parent_edge[a] == e || parent_edge[b] == e) continue;
    std::vector<MatchingId> left, right;
    while (depth[a] > depth[b]) left.push_back(h.vertices[a]), a = parent[a];
    while (depth[b] > depth[a]) right.push_back(h.vertices[b]), b = parent[b];
    while (a != b) {
      left.push_back(h.vertices[a]), a = parent[a];
      right.push_back(h.vertices[b]), b = parent[b];
    }
    left.push_back(h.vertices[a]);
    left.insert(left.end(), right.rbegin(), right.rend());
    cycles.push_back(std::move(left));
  }
  return cycles;
}

namespace {

// Union-find labels of H \ E_i on local indices, relabeled by least vertex.
std::vector<int> class_deleted_labels(const ResonanceGraph& r, const Component& h, FaceId face, int& parts) {
  if (h.face_index(face) < 0)
    throw Error(ErrorCode::UnknownFaceClass, "face " + std::to_string(face) + " labels no edge of component " +
                                                 std::to_string(h.id));
  const int n = static_cast<int>(h.size());
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (int e : h.edges) {
    const auto& ed = r.edges()[e];
    if (ed.face == face) continue;
    const int a = find(h.local_index(ed.a));
    const int b = find(h.local_index(ed.b));
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> label(n, -1), of_root(n, -1);
  parts = 0;
  for (int v = 0; v < n; ++v) {
    const int rt = find(v);
    if (of_root[rt] < 0) of_root[rt] = parts++;
    label[v] = of_root[rt];
  }
  return label;
}

}  // namespace

std::vector<std::vector<MatchingId>> delete_class_components(const ResonanceGraph& r, const Component& h, FaceId face) {
  int parts = 0;
  const auto label = class_deleted_labels(r, h, face, parts);
  std::vector<std::vector<MatchingId>> out(parts);
  for (int v = 0; v < static_cast<int>(h.size()); ++v) out[label[v]].push_back(h.vertices[v]);
  return out;
}

int QuotientGraph::node_of(MatchingId m) const {
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    if (std::binary_search(nodes[i].begin(), nodes[i].end(), m)) return i;
  return -1;
}

QuotientGraph quotient_graph(const ResonanceGraph& r, const Component& h, FaceId face) {
  int parts = 0;
  const auto label = class_deleted_labels(r, h, face, parts);
  QuotientGraph q;
  q.face = face;
  q.nodes.assign(parts, {});
  for (int v = 0; v < static_cast<int>(h.size()); ++v) q.nodes[label[v]].push_back(h.vertices[v]);

  std::set<std::pair<int, int>> merged;
  for (int e : h.classes.at(face)) {
    const int a = label[h.local_index(r.edges()[e].a)];
    const int b = label[h.local_index(r.edges()[e].b)];
    if (a == b) {
      ++q.suppressed_loops;
      continue;
    }
    merged.insert(std::minmax(a, b));
  }
  q.edges.assign(merged.begin(), merged.end());

  const SimpleGraph quotient(parts, q.edges);
  if (auto coloring = quotient.two_coloring()) {
    q.bipartite = true;
    q.side = std::move(*coloring);
  }
  return q;
}

std::string to_dot(const ResonanceGraph& r) {
  std::ostringstream out;
  out << "graph resonance {\n";
  for (MatchingId m = 0; m < r.vertex_count(); ++m) {
    out << "  " << m << " [label=\"M" << m << "\"];\n";
  }
  for (const auto& e : r.edges()) out << "  " << e.a << " -- " << e.b << " [label=\"f" << e.face << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace resgraph
