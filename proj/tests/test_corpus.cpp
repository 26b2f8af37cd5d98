#include <algorithm>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "resgraph/emb_format.hpp"
#include "resgraph/polynomials.hpp"
#include "resgraph/report.hpp"
#include "test_support.hpp"

using namespace resgraph;
using namespace testing_support;

namespace {

std::string data_path(const std::string& file) { return std::string(RESGRAPH_DATA_DIR) + "/" + file; }

ErrorCode parse_error(const std::string& text, std::string* message = nullptr) {
  try {
    parse_emb(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  FAIL("expected a parse error for:\n" << text);
  return ErrorCode::InvalidInput;
}

std::vector<int> plain_ids(const EvenFaceSet& F) { return {F.ids().begin(), F.ids().end()}; }

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("ladder3 fixture file") {
    const auto g = read_emb_file(data_path("ladder3.emb"));
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 7);
    CHECK(g.face_count() == 3);
    CHECK(g == builtin_instance("ladder3").graph);
  }

  TEST_CASE("coronene fixture file") {
    const auto g = read_emb_file(data_path("coronene.emb"));
    CHECK(g.vertex_count() == 24);
    CHECK(g.edge_count() == 30);
    REQUIRE(g.face_count() == 8);
    int hexagons = 0;
    for (const auto& f : g.faces()) {
      CHECK(f.is_cycle);
      CHECK(f.is_even);
      hexagons += f.length() == 6;
      if (f.length() != 6) CHECK(f.length() == 18);
    }
    CHECK(hexagons == 7);
    CHECK(euler_genus(g) == 0);
  }

  TEST_CASE("every exported fixture matches its bundled instance") {
    for (const auto& inst : builtin_corpus()) {
      const auto path = data_path(inst.name + ".emb");
      REQUIRE(std::filesystem::exists(path));
      CAPTURE(inst.name);
      CHECK(read_emb_file(path) == inst.graph);
    }
  }

  TEST_CASE("syntax errors carry line and column") {
    std::string msg;
    CHECK(parse_error("edge 0 0 1\n", &msg) == ErrorCode::SyntaxError);
    CHECK(msg.find("line 1, column 1") != std::string::npos);

    CHECK(parse_error("vertices 2\nedge 0 0 x\n", &msg) == ErrorCode::SyntaxError);
    CHECK(msg.find("line 2, column 10") != std::string::npos);

    CHECK(parse_error("vertices 2\n# comment\nedge 0 0 1 *\n", &msg) == ErrorCode::SyntaxError);
    CHECK(msg.find("line 3, column 12") != std::string::npos);

    CHECK(parse_error("vertices 2\n  bogus 1\n", &msg) == ErrorCode::SyntaxError);
    CHECK(msg.find("line 2, column 3") != std::string::npos);

    CHECK(parse_error("vertices 2\nedge 0 0 1\nedge 0 1 0\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("vertices 2\nrot 0 0\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("vertices 2\nedge 0 0 5\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("vertices 2\nvertices 2\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("") == ErrorCode::SyntaxError);
  }

  TEST_CASE("structural problems are semantic errors") {
    // gap in edge ids
    CHECK(parse_error("vertices 3\nedge 0 0 1\nedge 2 1 2\nrot 0 : 0\nrot 1 : 0 2\nrot 2 : 2\n") ==
          ErrorCode::SemanticError);
    // missing rotation
    CHECK(parse_error("vertices 2\nedge 0 0 1\nrot 0 : 0\n") == ErrorCode::SemanticError);
    // rotation does not match incidence
    CHECK(parse_error("vertices 2\nedge 0 0 1\nrot 0 : 0\nrot 1 :\n") == ErrorCode::SemanticError);
    // loop and parallel edge
    CHECK(parse_error("vertices 1\nedge 0 0 0\nrot 0 : 0 0\n") == ErrorCode::SemanticError);
    CHECK(parse_error("vertices 2\nedge 0 0 1\nedge 1 0 1\nrot 0 : 0 1\nrot 1 : 1 0\n") == ErrorCode::SemanticError);
  }

  TEST_CASE("comments, blank lines and default signs") {
    const auto g = parse_emb("# a single edge\n\nvertices 2   # two ends\nedge 0 0 1\nrot 0 : 0\nrot 1 : 0");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge(0).sign == +1);
    CHECK(g.face_count() == 1);
  }

  TEST_CASE("write then parse is the identity") {
    for (const auto& inst : sweep_instances()) {
      CAPTURE(inst.name);
      const auto text = write_emb(inst.graph);
      const auto back = parse_emb(text);
      CHECK(back == inst.graph);
      CHECK(write_emb(back) == text);
    }
    // signs survive
    const auto pk = parse_emb(write_emb(projective_k4()));
    CHECK(euler_genus(pk) == 1);
  }

  TEST_CASE("bundled corpus contents") {
    const auto corpus = builtin_corpus();
    std::vector<std::string> names;
    for (const auto& inst : corpus) names.push_back(inst.name);
    CHECK(names == std::vector<std::string>{"c4xc4-torus", "c6", "c6-pair", "c6xp2-cylinder", "coronene",
                                            "k2-sphere", "k4-projective", "ladder3", "ladder4"});
    for (const auto& inst : corpus) {
      CAPTURE(inst.name);
      CHECK_FALSE(inst.face_sets.empty());
      CHECK_FALSE(inst.expected.empty());
      for (const auto& s : inst.face_sets) CHECK_NOTHROW(validate_even_face_set(inst.graph, s.ids));
    }
    CHECK_THROWS_AS(builtin_instance("no-such-thing"), Error);
    CHECK_THROWS_AS(builtin_instance("ladder3").face_set("none"), Error);
    CHECK_THROWS_AS(builtin_instance("ladder3").face_named("h9"), Error);
  }

  TEST_CASE("frozen expectations agree with the oracles") {
    for (const auto& inst : builtin_corpus()) {
      const auto ms = oracle::perfect_matchings(oracle::plain(inst.graph));
      for (const auto& x : inst.expected) {
        CAPTURE(inst.name);
        CAPTURE(x.face_set);
        const auto F = validate_even_face_set(inst.graph, inst.face_set(x.face_set).ids);
        CHECK(ms.size() == x.matchings);
        std::vector<oracle::EdgeSet> face_edges;
        for (const auto& f : inst.graph.faces()) face_edges.push_back({f.edges.begin(), f.edges.end()});
        const auto edges = oracle::resonance_edges(ms, face_edges, plain_ids(F));
        CHECK(edges.size() == x.resonance_edges);
        std::vector<std::pair<int, int>> pairs;
        for (const auto& e : edges) pairs.emplace_back(e.a, e.b);
        CHECK(static_cast<std::size_t>(oracle::component_count(oracle::adjacency(static_cast<int>(ms.size()), pairs))) ==
              x.components);
        if (F.size() <= 16) CHECK(oracle::zz_polynomial(inst.graph, plain_ids(F)) == x.zz);
      }
    }
  }

  TEST_CASE("generators") {
    const auto b = generate_random(GeneratorKind::BenzenoidPatch, {3, 0}, 7);
    CHECK(b.graph.vertex_count() == 14);
    CHECK(b.graph.edge_count() == 16);
    CHECK(euler_genus(b.graph) == 0);
    CHECK(b.metadata.at("seed") == "7");

    const auto again = generate_random(GeneratorKind::BenzenoidPatch, {3, 0}, 7);
    CHECK(again.graph == b.graph);
    CHECK(again.face_sets.front().ids == b.face_sets.front().ids);

    const auto grid = generate_random(GeneratorKind::GridPlane, {2, 3}, 0);
    CHECK(grid.graph == builtin_instance("ladder3").graph);

    const auto cyl = generate_random(GeneratorKind::GridCylinder, {4, 2}, 1);
    CHECK(euler_genus(cyl.graph) == 0);
    const auto torus = generate_random(GeneratorKind::GridTorus, {4, 4}, 1);
    CHECK(euler_genus(torus.graph) == 2);

    auto size_bound = [](GeneratorKind k, GeneratorSize s) {
      try {
        generate_random(k, s, 0);
      } catch (const Error& e) {
        return e.code() == ErrorCode::SizeBound;
      }
      return false;
    };
    CHECK(size_bound(GeneratorKind::GridTorus, {3, 3}));
    CHECK(size_bound(GeneratorKind::GridPlane, {1, 4}));
    CHECK(size_bound(GeneratorKind::BenzenoidPatch, {0, 0}));
    CHECK(size_bound(GeneratorKind::GridPlane, {8, 8}));  // far too many matchings
  }

  TEST_CASE("generated face sets") {
    for (const auto& inst : small_generated(3)) {
      CAPTURE(inst.name);
      const auto random = validate_even_face_set(inst.graph, inst.face_set("random").ids);
      CHECK(random.is_proper_subset());
      const auto minus = validate_even_face_set(inst.graph, inst.face_set("all-even-minus-one").ids);
      CHECK(minus.is_proper_subset());
      CHECK(inst.face_set("all-even").ids == even_faces(inst.graph));
    }
  }

  TEST_CASE("face selectors and argument parsers") {
    const auto& l4 = builtin_instance("ladder4");
    CHECK(select_faces(l4.graph, "all-even") == std::vector<FaceId>{0, 1, 2, 3});
    CHECK(select_faces(l4.graph, "all-even-except 3") == std::vector<FaceId>{0, 1, 2});
    CHECK(select_faces(l4.graph, "all-even-except=0") == std::vector<FaceId>{1, 2, 3});
    CHECK(select_faces(l4.graph, "2,0") == std::vector<FaceId>{2, 0});
    CHECK(select_faces(l4.graph, "inner", &l4) == l4.face_set("inner").ids);
    CHECK_THROWS_AS(select_faces(l4.graph, "inner"), Error);
    CHECK_THROWS_AS(select_faces(l4.graph, "all-even-except 9"), Error);

    CHECK(parse_generator_kind("grid-plane") == GeneratorKind::GridPlane);
    CHECK(parse_generator_kind("benzenoid-patch") == GeneratorKind::BenzenoidPatch);
    CHECK(to_string(GeneratorKind::GridTorus) == "grid-torus");
    CHECK_THROWS_AS(parse_generator_kind("moebius"), Error);
    const auto s = parse_generator_size("4x6");
    CHECK(s.a == 4);
    CHECK(s.b == 6);
    CHECK(parse_generator_size("5").a == 5);
    CHECK_THROWS_AS(parse_generator_size("4y6"), Error);
  }

  TEST_CASE("reports are deterministic and reproduce the frozen values") {
    for (const auto& inst : builtin_corpus()) {
      for (const auto& s : inst.face_sets) {
        CAPTURE(inst.name);
        CAPTURE(s.name);
        const auto a = run_report(inst, s.name);
        const auto b = run_report(inst, s.name);
        CHECK(a.json.dump() == b.json.dump());
        CHECK(a.passed);
        CHECK(a.json["schema"] == kReportSchema);
        CHECK(a.json["checks"]["regression"] == true);
        CHECK(a.json["mode"] == (validate_even_face_set(inst.graph, s.ids).is_proper_subset() ? "assert"
                                                                                              : "report-violations"));
      }
    }
  }

  TEST_CASE("full face sets need explicit permission outside the corpus") {
    const auto& l3 = builtin_instance("ladder3");
    try {
      run_report(l3.graph, l3.face_set("all").ids);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidInput);
    }
    ReportOptions allow;
    allow.allow_full_face_set = true;
    const auto r = run_report(l3.graph, l3.face_set("all").ids, allow);
    CHECK(r.json["mode"] == "report-violations");
    CHECK(r.json["resonance"]["bipartite"] == false);
    CHECK(r.passed);  // theorem checks are reported, not enforced
    CHECK_FALSE(r.violations.empty());
  }

  TEST_CASE("report contents for coronene") {
    const auto r = run_report(builtin_instance("coronene"), "inner7");
    const auto& j = r.json;
    CHECK(j["matchings"] == 20);
    CHECK(j["polynomials"]["zz_text"] == "20 + 32x + 15x^2 + 2x^3");
    CHECK(j["polynomials"]["equal"] == true);
    CHECK(j["polynomials"]["clar_number"] == 3);
    const auto& comp = j["resonance"]["components"][0];
    CHECK(comp["embedding"]["dimension"] == 7);
    CHECK(comp["isometry"]["isometric"] == false);
    CHECK(comp["median"]["median"] == true);
    CHECK(comp["face_subgraph"]["passes"] == true);
    CHECK(comp["face_subgraph"]["vertices"] == 24);
    CHECK(r.violations.empty());
  }
}
