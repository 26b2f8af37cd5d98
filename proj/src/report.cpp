#include "resgraph/report.hpp"

#include <algorithm>

#include "resgraph/cube_embedding.hpp"
#include "resgraph/error.hpp"
#include "resgraph/matching.hpp"
#include "resgraph/polynomials.hpp"
#include "resgraph/resonance.hpp"

namespace resgraph {

namespace {

using Json = nlohmann::ordered_json;

std::string face_label(const CorpusInstance* instance, FaceId f) {
  if (instance) {
    if (auto it = instance->face_names.find(f); it != instance->face_names.end()) return it->second;
  }
  return std::to_string(f);
}

Json pair_json(const PairWitness& w) {
  return Json{{"u", w.u}, {"v", w.v}, {"distance", w.distance}, {"hamming", w.hamming}};
}

// Theorem checks collected over the whole report; a check is true until some
// component or cycle refutes it.
struct Checks {
  bool bipartite = true;
  bool cycle_parity = true;
  bool class_separation = true;
  bool quotients_bipartite = true;
  bool induced_embedding = true;
  bool polynomials_equal = true;
  bool bijection = true;
  bool four_cycles = true;
  bool partial_cube_implies_embedding = true;
  // always asserted
  bool degree_bound = true;
  bool face_subgraph = true;
  bool median_implies_partial_cube = true;
  bool regression = true;
};

Json component_json(const EmbeddedGraph& g, const ResonanceGraph& r, const Component& h,
                    const ReportOptions& options, const CorpusInstance* instance, Checks& checks) {
  Json out;
  out["id"] = h.id;
  out["vertices"] = h.size();
  out["edges"] = h.edges.size();
  out["least_matching"] = h.vertices.front();
  Json faces = Json::array();
  for (FaceId f : h.faces) faces.push_back(face_label(instance, f));
  out["faces"] = faces;
  Json classes = Json::object();
  for (const auto& [f, es] : h.classes) classes[face_label(instance, f)] = es.size();
  out["class_sizes"] = classes;

  // Face multiplicities along a cycle basis.
  const auto cycles = fundamental_cycles(r, h);
  std::size_t odd_cycles = 0;
  Json first_odd;
  for (const auto& cycle : cycles) {
    const auto counts = check_cycle_face_parity(r, cycle);
    const bool even = std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second % 2 == 0; });
    if (!even && odd_cycles++ == 0) {
      first_odd["cycle"] = cycle;
      Json c = Json::object();
      for (const auto& [f, n] : counts) c[face_label(instance, f)] = n;
      first_odd["face_counts"] = c;
    }
  }
  out["cycle_parity"] = Json{{"cycles", cycles.size()}, {"odd", odd_cycles}};
  if (odd_cycles) out["cycle_parity"]["first_odd"] = first_odd;
  checks.cycle_parity = checks.cycle_parity && odd_cycles == 0;

  // Class deletion and quotients.
  Json quotients = Json::array();
  bool all_bipartite = true;
  for (FaceId f : h.faces) {
    const auto q = quotient_graph(r, h, f);
    const bool separated = q.suppressed_loops == 0;
    checks.class_separation = checks.class_separation && separated;
    all_bipartite = all_bipartite && q.bipartite;
    Json qj{{"face", face_label(instance, f)},
            {"nodes", q.nodes.size()},
            {"edges", q.edges.size()},
            {"separated", separated},
            {"bipartite", q.bipartite}};
    if (q.bipartite) {
      std::size_t a = 0;
      for (int s : q.side) a += s == 0;
      qj["sides"] = Json::array({a, q.nodes.size() - a});
    }
    quotients.push_back(qj);
  }
  out["quotients"] = quotients;
  checks.quotients_bipartite = checks.quotients_bipartite && all_bipartite;

  // Labeling and metric properties.
  bool embedding_passed = false;
  if (all_bipartite) {
    const auto lab = compute_labeling(r, h);
    const auto ec = verify_induced_embedding(r, h, lab);
    embedding_passed = ec.passed();
    out["embedding"] = Json{{"dimension", lab.dimension()},
                            {"injective", ec.injective},
                            {"one_bit_edges", ec.one_bit_edges},
                            {"induced", ec.induced}};
    const auto iso = is_isometric_labeling(r, h, lab);
    Json ij{{"isometric", iso.isometric}, {"violating_pairs", iso.violating_pairs}};
    if (iso.witness) ij["witness"] = pair_json(*iso.witness);
    if (iso.widest) ij["widest"] = pair_json(*iso.widest);
    out["isometry"] = ij;
  } else {
    out["embedding"] = nullptr;
    out["isometry"] = nullptr;
  }
  checks.induced_embedding = checks.induced_embedding && embedding_passed;

  const SimpleGraph hg = component_graph(r, h);
  std::optional<bool> partial;
  if (h.size() <= options.partial_cube_limit) partial = is_partial_cube(hg);
  out["partial_cube"] = partial ? Json(*partial) : Json("skipped");

  std::optional<bool> median;
  if (h.size() <= options.median_limit) {
    const auto mc = is_median_graph(hg);
    median = mc.median;
    Json mj{{"median", mc.median}};
    if (mc.witness) {
      mj["witness"] = Json{{"a", h.vertices[mc.witness->a]},
                           {"b", h.vertices[mc.witness->b]},
                           {"c", h.vertices[mc.witness->c]},
                           {"medians", mc.witness->medians}};
    }
    out["median"] = mj;
  } else {
    out["median"] = "skipped";
  }
  // median => partial cube => the labeling is an induced cubical embedding
  if (median && *median && partial && !*partial) checks.median_implies_partial_cube = false;
  if (partial && *partial && !embedding_passed) checks.partial_cube_implies_embedding = false;

  const auto fs = component_face_subgraph(g, r, h);
  Json fj{{"vertices", fs.vertices.size()}, {"edges", fs.edges.size()}, {"passes", fs.passes}};
  if (fs.failing) fj["failing_matching"] = *fs.failing;
  out["face_subgraph"] = fj;
  checks.face_subgraph = checks.face_subgraph && fs.passes;
  return out;
}

Json polynomial_json(const IntegerPolynomial& p) {
  Json out = Json::array();
  for (auto c : p.coefficients()) out.push_back(c);
  return out;
}

void compare_expectation(const Expectation& e, std::size_t matchings, std::size_t edges, std::size_t comps,
                         const IntegerPolynomial& zz, Json& out, bool& ok) {
  const bool same = e.matchings == matchings && e.resonance_edges == edges && e.components == comps &&
                    e.zz == zz.coefficients();
  out = Json{{"matchings", e.matchings},
             {"resonance_edges", e.resonance_edges},
             {"components", e.components},
             {"zz", e.zz},
             {"matches", same}};
  ok = ok && same;
}

}  // namespace

Report run_report(const EmbeddedGraph& g, const std::vector<FaceId>& face_ids, const ReportOptions& options,
                  const CorpusInstance* instance, const std::string& face_set_name) {
  const EvenFaceSet F = validate_even_face_set(g, face_ids);
  const bool proper = F.is_proper_subset();
  if (!proper && !options.allow_full_face_set)
    throw Error(ErrorCode::InvalidInput,
                "the face set contains every face; theorem checks need a proper subset (use --allow-full-face-set "
                "to report violations instead)");

  Report report;
  Json& j = report.json;
  j["schema"] = kReportSchema;
  j["instance"] = instance ? instance->name : "";
  j["face_set"] = Json{{"name", face_set_name}, {"ids", F.ids()}, {"proper_subset", proper}};
  j["mode"] = proper ? "assert" : "report-violations";
  if (instance && !instance->metadata.empty()) {
    Json meta = Json::object();
    for (const auto& [k, v] : instance->metadata) meta[k] = v;
    j["metadata"] = meta;
  }

  Json graph{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"faces", g.face_count()}};
  graph["euler_genus"] = g.is_connected() ? Json(euler_genus(g)) : Json(nullptr);
  j["graph"] = graph;

  Json faces = Json::array();
  for (const auto& f : g.faces()) {
    faces.push_back(Json{{"id", f.id},
                         {"name", face_label(instance, f.id)},
                         {"length", f.length()},
                         {"is_cycle", f.is_cycle},
                         {"is_even", f.is_even},
                         {"in_face_set", F.contains(f.id)},
                         {"edges", f.edges}});
  }
  j["faces"] = faces;

  Checks checks;
  const ResonanceGraph r = build_resonance_graph(g, F);
  j["matchings"] = r.vertex_count();

  const auto comps = components(r);
  const bool bipartite = r.as_simple_graph().two_coloring().has_value();
  checks.bipartite = bipartite;
  std::size_t max_degree = 0;
  for (MatchingId m = 0; m < r.vertex_count(); ++m) max_degree = std::max(max_degree, r.incident(m).size());
  checks.degree_bound = max_degree <= F.size();

  Json resonance{{"vertices", r.vertex_count()},
                 {"edges", r.edges().size()},
                 {"bipartite", bipartite},
                 {"max_degree", max_degree},
                 {"component_count", comps.size()}};
  Json comp_json = Json::array();
  for (const auto& h : comps) comp_json.push_back(component_json(g, r, h, options, instance, checks));
  resonance["components"] = comp_json;
  j["resonance"] = resonance;

  Json poly;
  IntegerPolynomial zz;
  if (static_cast<std::size_t>(r.vertex_count()) <= options.polynomial_limit) {
    const auto eq = check_equivalence(g, F, r);
    zz = eq.zz;
    checks.polynomials_equal = eq.equal;
    checks.bijection = eq.bijective();
    poly["zz"] = polynomial_json(eq.zz);
    poly["cube"] = polynomial_json(eq.cube);
    poly["zz_text"] = eq.zz.to_string();
    poly["cube_text"] = eq.cube.to_string();
    poly["equal"] = eq.equal;
    poly["clar_number"] = eq.zz.degree();
    Json degrees = Json::array();
    for (const auto& d : eq.degrees) {
      degrees.push_back(Json{{"k", d.k},
                             {"covers", d.covers},
                             {"cubes", d.cubes},
                             {"images_are_cubes", d.images_are_cubes},
                             {"injective", d.injective},
                             {"faces_disjoint", d.faces_disjoint},
                             {"surjective", d.surjective}});
    }
    poly["bijection"] = degrees;
  } else {
    zz = zz_polynomial(g, F);
    poly["zz"] = polynomial_json(zz);
    poly["zz_text"] = zz.to_string();
    poly["cube"] = "skipped";
  }
  j["polynomials"] = poly;

  const auto four = check_4cycle_lemma(g, F, r);
  checks.four_cycles = four.passed();
  Json fj{{"cycles", four.cycles}, {"violations", Json::array()}};
  for (const auto& c : four.violations) {
    Json labels = Json::array();
    for (FaceId f : c.faces) labels.push_back(face_label(instance, f));
    fj["violations"].push_back(Json{{"vertices", c.vertices},
                                    {"faces", labels},
                                    {"opposite_equal", c.opposite_equal},
                                    {"disjoint", c.disjoint}});
  }
  j["four_cycles"] = fj;

  if (instance) {
    for (const auto& e : instance->expected) {
      if (e.face_set != face_set_name) continue;
      Json ej;
      compare_expectation(e, static_cast<std::size_t>(r.vertex_count()), r.edges().size(), comps.size(), zz, ej,
                          checks.regression);
      j["expected"] = ej;
    }
  }

  const std::vector<std::pair<std::string, bool>> theorem_checks = {
      {"bipartite", checks.bipartite},
      {"cycle_parity", checks.cycle_parity},
      {"class_separation", checks.class_separation},
      {"quotients_bipartite", checks.quotients_bipartite},
      {"induced_embedding", checks.induced_embedding},
      {"polynomials_equal", checks.polynomials_equal},
      {"bijection", checks.bijection},
      {"four_cycles", checks.four_cycles},
      {"partial_cube_implies_embedding", checks.partial_cube_implies_embedding},
  };
  const std::vector<std::pair<std::string, bool>> always_checks = {
      {"degree_bound", checks.degree_bound},
      {"face_subgraph", checks.face_subgraph},
      {"median_implies_partial_cube", checks.median_implies_partial_cube},
      {"regression", checks.regression},
  };
  Json cj = Json::object();
  for (const auto& [name, ok] : theorem_checks) {
    cj[name] = ok;
    if (!ok) report.violations.push_back(name);
  }
  for (const auto& [name, ok] : always_checks) {
    cj[name] = ok;
    if (!ok) report.passed = false;
  }
  if (proper && !report.violations.empty()) report.passed = false;
  j["checks"] = cj;
  j["violations"] = report.violations;
  j["passed"] = report.passed;
  return report;
}

Report run_report(const CorpusInstance& instance, const std::string& face_set_name, const ReportOptions& options) {
  ReportOptions fixture = options;
  fixture.allow_full_face_set = true;
  return run_report(instance.graph, instance.face_set(face_set_name).ids, fixture, &instance, face_set_name);
}

nlohmann::ordered_json median_survey(const EmbeddedGraph& g, const std::vector<FaceId>& face_ids,
                                     std::size_t median_limit, bool& consistent) {
  const EvenFaceSet F = validate_even_face_set(g, face_ids);
  const ResonanceGraph r = build_resonance_graph(g, F);
  Json out = Json::array();
  for (const auto& h : components(r)) {
    Json cj{{"id", h.id}, {"vertices", h.size()}, {"edges", h.edges.size()}};
    if (h.size() > median_limit) {
      cj["median"] = "skipped";
      out.push_back(cj);
      continue;
    }
    const SimpleGraph hg = component_graph(r, h);
    const auto mc = is_median_graph(hg);
    const bool partial = is_partial_cube(hg);
    bool embedded = false;
    bool labeled = true;
    for (FaceId f : h.faces) labeled = labeled && quotient_graph(r, h, f).bipartite;
    if (labeled) embedded = verify_induced_embedding(r, h, compute_labeling(r, h)).passed();
    cj["median"] = mc.median;
    cj["partial_cube"] = partial;
    cj["induced_embedding"] = embedded;
    if (mc.witness) {
      cj["witness"] = Json{{"a", h.vertices[mc.witness->a]},
                           {"b", h.vertices[mc.witness->b]},
                           {"c", h.vertices[mc.witness->c]},
                           {"medians", mc.witness->medians}};
    }
    if ((mc.median && !partial) || (partial && !embedded)) consistent = false;
    out.push_back(cj);
  }
  return out;
}

}  // namespace resgraph
