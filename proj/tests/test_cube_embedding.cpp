#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "resgraph/cube_embedding.hpp"
#include "test_support.hpp"

using namespace resgraph;
using namespace testing_support;

namespace {

oracle::Adjacency adjacency_of(const SimpleGraph& g) {
  oracle::Adjacency adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  return adj;
}

SimpleGraph complete_bipartite(int a, int b) {
  SimpleGraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

SimpleGraph complete(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph random_connected(std::mt19937_64& rng, int n, int extra) {
  SimpleGraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(rng() % v), v);
  for (int i = 0; i < extra; ++i) {
    const int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a != b && !g.has_edge(a, b)) g.add_edge(a, b);
  }
  return g;
}

// Direct checks of the three embedding properties from the labels alone.
void expect_induced_cube(const ResonanceGraph& r, const Component& h, const CubeLabeling& lab) {
  const std::size_t n = h.size();
  REQUIRE(lab.labels.size() == n);
  for (const auto& l : lab.labels) CHECK(l.size() == static_cast<std::size_t>(lab.dimension()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto d = hamming_distance(lab.labels[i], lab.labels[j]);
      CHECK(d > 0);
      const bool adjacent = r.edge_between(h.vertices[i], h.vertices[j]).has_value();
      CHECK(adjacent == (d == 1));
    }
  for (int e : h.edges) {
    const auto& edge = r.edges()[e];
    const auto diff = lab.labels[h.local_index(edge.a)] ^ lab.labels[h.local_index(edge.b)];
    CHECK(diff.count() == 1);
    CHECK(lab.coordinates.at(diff.find_first()) == edge.face);
  }
}

}  // namespace

TEST_SUITE("cube_embedding") {
  TEST_CASE("hexagon: labels 0 and 1") {
    const auto b = build("c6", "inner");
    const auto lab = compute_labeling(b.r, b.comps[0]);
    CHECK(lab.dimension() == 1);
    CHECK_FALSE(lab.labels[0].test(0));
    CHECK(lab.labels[1].test(0));
  }

  TEST_CASE("ladder3 with two squares: a path in Q2") {
    const auto b = build("ladder3", "inner");
    const auto lab = compute_labeling(b.r, b.comps[0]);
    CHECK(lab.dimension() == 2);
    expect_induced_cube(b.r, b.comps[0], lab);
    const auto check = verify_induced_embedding(b.r, b.comps[0], lab);
    CHECK(check.injective);
    CHECK(check.one_bit_edges);
    CHECK(check.induced);
    CHECK(is_isometric_labeling(b.r, b.comps[0], lab).isometric);
  }

  TEST_CASE("ladder4 with three squares: five distinct 3-bit labels") {
    const auto b = build("ladder4", "inner");
    const auto lab = compute_labeling(b.r, b.comps[0]);
    CHECK(lab.dimension() == 3);
    std::set<std::vector<int>> distinct;
    for (const auto& l : lab.labels) distinct.insert(l.to_indices());
    CHECK(distinct.size() == 5);
    CHECK(verify_induced_embedding(b.r, b.comps[0], lab).passed());
    // the least matching lies on side A of every quotient
    CHECK(lab.labels[0].none());
  }

  TEST_CASE("coronene: the labeling is an induced but not isometric embedding into Q7") {
    const auto b = build("coronene", "inner7");
    REQUIRE(b.comps.size() == 1);
    const auto& h = b.comps[0];
    const auto lab = compute_labeling(b.r, h);
    CHECK(lab.dimension() == 7);
    CHECK(h.size() == 20);
    CHECK(verify_induced_embedding(b.r, h, lab).passed());
    expect_induced_cube(b.r, h, lab);

    const auto iso = is_isometric_labeling(b.r, h, lab);
    CHECK_FALSE(iso.isometric);
    REQUIRE(iso.widest.has_value());
    CHECK(iso.widest->distance == 8);
    CHECK(iso.widest->hamming == 6);
    REQUIRE(iso.witness.has_value());

    // recompute the witnesses from an independent distance table
    const auto d = oracle::distance_table(component_adjacency(b.r, h));
    for (const auto& w : {*iso.witness, *iso.widest}) {
      const int u = h.local_index(w.u), v = h.local_index(w.v);
      CHECK(d[u][v] == w.distance);
      CHECK(static_cast<int>(hamming_distance(lab.labels[u], lab.labels[v])) == w.hamming);
      CHECK(w.distance != w.hamming);
    }
    std::size_t violating = 0;
    int widest_gap = 0;
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i + 1; j < h.size(); ++j) {
        const int gap = d[i][j] - static_cast<int>(hamming_distance(lab.labels[i], lab.labels[j]));
        violating += gap != 0;
        widest_gap = std::max(widest_gap, gap);
      }
    CHECK(iso.violating_pairs == violating);
    CHECK(widest_gap == 2);

    // the pair sits on opposite sides for every rim hexagon and on the same
    // side, in non-adjacent parts, for the central one
    const int u = h.local_index(iso.widest->u), v = h.local_index(iso.widest->v);
    for (int i = 1; i <= 6; ++i) {
      const FaceId f = b.face("h" + std::to_string(i));
      const auto parts = delete_class_components(b.r, h, f);
      CHECK(parts.size() == 2);
      const int bit = h.face_index(f);
      CHECK(lab.labels[u].test(bit) != lab.labels[v].test(bit));
    }
    const FaceId h7 = b.face("h7");
    const auto q = quotient_graph(b.r, h, h7);
    CHECK(q.nodes.size() == 3);
    const int nu = q.node_of(iso.widest->u), nv = q.node_of(iso.widest->v);
    CHECK(nu != nv);
    CHECK(std::find(q.edges.begin(), q.edges.end(), std::pair<int, int>(std::min(nu, nv), std::max(nu, nv))) == q.edges.end());
    CHECK(lab.labels[u].test(h.face_index(h7)) == lab.labels[v].test(h.face_index(h7)));
  }

  TEST_CASE("a single-vertex component is trivially isometric") {
    const auto b = build("k2-sphere", "empty");
    REQUIRE(b.comps.size() == 1);
    const auto lab = compute_labeling(b.r, b.comps[0]);
    CHECK(lab.dimension() == 0);
    CHECK(verify_induced_embedding(b.r, b.comps[0], lab).passed());
    CHECK(is_isometric_labeling(b.r, b.comps[0], lab).isometric);
  }

  TEST_CASE("induced embedding holds on every component when F is a proper subset") {
    for (const auto& inst : sweep_instances()) {
      for (const auto& s : inst.face_sets) {
        const auto F = validate_even_face_set(inst.graph, s.ids);
        if (!F.is_proper_subset()) continue;
        const auto r = build_resonance_graph(inst.graph, F);
        for (const auto& h : components(r)) {
          CAPTURE(inst.name);
          CAPTURE(s.name);
          const auto lab = compute_labeling(r, h);
          CHECK(lab.coordinates == h.faces);
          CHECK(verify_induced_embedding(r, h, lab).passed());
          expect_induced_cube(r, h, lab);
        }
      }
    }
  }

  TEST_CASE("the checker notices when F is every face") {
    const auto b = build("ladder3", "all");
    const auto lab = compute_labeling(b.r, b.comps[0]);
    const auto check = verify_induced_embedding(b.r, b.comps[0], lab);
    CHECK_FALSE(check.passed());
  }

  TEST_CASE("partial cubes") {
    CHECK(is_partial_cube(path_graph(3)));
    CHECK(is_partial_cube(cycle_graph(6)));
    CHECK(is_partial_cube(hypercube_graph(3)));
    CHECK_FALSE(is_partial_cube(complete(3)));
    CHECK_FALSE(is_partial_cube(complete_bipartite(2, 3)));
    CHECK_FALSE(is_partial_cube(cycle_graph(5)));

    const auto l4 = build("ladder4", "inner");
    CHECK(is_partial_cube(component_graph(l4.r, l4.comps[0])));
  }

  TEST_CASE("median graphs") {
    CHECK(is_median_graph(path_graph(2)).median);
    CHECK(is_median_graph(cycle_graph(4)).median);
    CHECK(is_median_graph(hypercube_graph(3)).median);
    CHECK_FALSE(is_median_graph(complete_bipartite(2, 3)).median);

    const auto c6 = cycle_graph(6);
    const auto mc = is_median_graph(c6);
    CHECK_FALSE(mc.median);
    REQUIRE(mc.witness.has_value());
    // verify the witness triple directly
    const auto d = oracle::distance_table(adjacency_of(c6));
    const auto [a, bb, c, medians] = *mc.witness;
    int count = 0;
    for (int m = 0; m < 6; ++m)
      count += d[a][m] + d[m][bb] == d[a][bb] && d[bb][m] + d[m][c] == d[bb][c] && d[a][m] + d[m][c] == d[a][c];
    CHECK(count == medians);
    CHECK(count != 1);
  }

  TEST_CASE("metric testers agree with the definitional oracles") {
    std::mt19937_64 rng(5);
    std::vector<SimpleGraph> graphs{path_graph(5), cycle_graph(6), cycle_graph(8), hypercube_graph(3),
                                    complete_bipartite(2, 3), complete_bipartite(3, 3), complete(4)};
    for (int i = 0; i < 60; ++i) graphs.push_back(random_connected(rng, 4 + static_cast<int>(rng() % 6), static_cast<int>(rng() % 5)));
    for (const auto& inst : sweep_instances()) {
      for (const auto& s : inst.face_sets) {
        const auto F = validate_even_face_set(inst.graph, s.ids);
        const auto r = build_resonance_graph(inst.graph, F);
        for (const auto& h : components(r))
          if (h.size() <= 40) graphs.push_back(component_graph(r, h));
      }
    }
    for (const auto& g : graphs) {
      const auto adj = adjacency_of(g);
      CHECK(is_partial_cube(g) == oracle::is_partial_cube(adj));
      CHECK(is_median_graph(g).median == oracle::is_median(adj));
    }
  }

  TEST_CASE("median implies partial cube implies the labeling passes") {
    for (const auto& inst : sweep_instances()) {
      for (const auto& s : inst.face_sets) {
        const auto F = validate_even_face_set(inst.graph, s.ids);
        if (!F.is_proper_subset()) continue;
        const auto r = build_resonance_graph(inst.graph, F);
        for (const auto& h : components(r)) {
          const auto hg = component_graph(r, h);
          const bool median = is_median_graph(hg).median;
          const bool partial = is_partial_cube(hg);
          if (median) CHECK(partial);
          if (partial) CHECK(verify_induced_embedding(r, h, compute_labeling(r, h)).passed());
        }
      }
    }
  }

  TEST_CASE("face subgraph restriction") {
    const auto l3 = build("ladder3", "inner");
    const auto fs = component_face_subgraph(l3.instance->graph, l3.r, l3.comps[0]);
    CHECK(fs.vertices.size() == 6);
    CHECK(fs.edges.size() == 7);
    CHECK(fs.passes);

    const auto c6 = build("c6", "inner");
    const auto fc = component_face_subgraph(c6.instance->graph, c6.r, c6.comps[0]);
    CHECK(fc.vertices.size() == 6);
    CHECK(fc.passes);

    const auto torus = build("c4xc4-torus", "all-even-minus-one");
    for (const auto& h : torus.comps) CHECK(component_face_subgraph(torus.instance->graph, torus.r, h).passes);
  }

  TEST_CASE("every matching restricts to a perfect matching of its face subgraph") {
    for (const auto& inst : sweep_instances()) {
      for (const auto& s : inst.face_sets) {
        const auto F = validate_even_face_set(inst.graph, s.ids);
        const auto r = build_resonance_graph(inst.graph, F);
        for (const auto& h : components(r)) {
          const auto fs = component_face_subgraph(inst.graph, r, h);
          CHECK(fs.passes);
          // independent recheck: each face-subgraph vertex meets exactly one
          // matched edge lying inside the face subgraph
          std::set<VertexId> inside(fs.vertices.begin(), fs.vertices.end());
          for (MatchingId m : h.vertices) {
            std::map<VertexId, int> cover;
            for (EdgeId e : r.matching(m).edges) {
              const auto& ed = inst.graph.edge(e);
              if (inside.contains(ed.u) && inside.contains(ed.v)) ++cover[ed.u], ++cover[ed.v];
            }
            for (VertexId v : fs.vertices) CHECK(cover[v] == 1);
          }
        }
      }
    }
  }
}
