// Command-line driver: face tracing, matchings, resonance graphs,
// polynomials, full structural reports and the median-graph hunt.
//
// Exit codes: 0 = every asserted check passed, 1 = a violation was found,
// 2 = input error.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "resgraph/corpus.hpp"
#include "resgraph/emb_format.hpp"
#include "resgraph/error.hpp"
#include "resgraph/matching.hpp"
#include "resgraph/polynomials.hpp"
#include "resgraph/report.hpp"
#include "resgraph/resonance.hpp"

namespace {

using namespace resgraph;
using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

constexpr std::string_view kBuiltinPrefix = "builtin:";

// A graph read from an .emb file, or a bundled instance named "builtin:<name>".
struct Input {
  EmbeddedGraph graph;
  const CorpusInstance* instance = nullptr;
};

Input load_input(const std::string& source) {
  if (source.rfind(kBuiltinPrefix, 0) == 0) {
    const auto& inst = builtin_instance(source.substr(kBuiltinPrefix.size()));
    return {inst.graph, &inst};
  }
  return {read_emb_file(source), nullptr};
}

void print(const Json& j, bool pretty) { std::cout << j.dump(pretty ? 2 : -1) << "\n"; }

Json polynomial_json(const IntegerPolynomial& p) {
  return Json{{"coefficients", p.coefficients()}, {"text", p.to_string()}};
}

int cmd_faces(const std::string& file, bool pretty) {
  const auto in = load_input(file);
  const auto& g = in.graph;
  Json out{{"schema", kReportSchema}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
  out["euler_genus"] = g.is_connected() ? Json(euler_genus(g)) : Json(nullptr);
  Json faces = Json::array();
  for (const auto& f : g.faces()) {
    Json boundary = Json::array();
    for (const auto& step : f.boundary) boundary.push_back(Json::array({step.vertex, step.edge}));
    Json fj{{"id", f.id}};
    if (in.instance) {
      if (auto it = in.instance->face_names.find(f.id); it != in.instance->face_names.end()) fj["name"] = it->second;
    }
    fj["length"] = f.length();
    fj["is_cycle"] = f.is_cycle;
    fj["is_even"] = f.is_even;
    fj["boundary"] = boundary;
    faces.push_back(fj);
  }
  out["faces"] = faces;
  out["even_faces"] = even_faces(g);
  print(out, pretty);
  return kExitPass;
}

int cmd_matchings(const std::string& file, bool list, bool pretty) {
  const auto in = load_input(file);
  const auto ms = enumerate_perfect_matchings(in.graph);
  Json out{{"schema", kReportSchema}, {"count", ms.size()}};
  if (list) {
    Json all = Json::array();
    for (const auto& m : ms) all.push_back(m.edges);
    out["matchings"] = all;
  }
  print(out, pretty);
  return kExitPass;
}

int cmd_resonance(const std::string& file, const std::string& selector, const std::string& dot, bool pretty) {
  const auto in = load_input(file);
  const auto F = validate_even_face_set(in.graph, select_faces(in.graph, selector, in.instance));
  const auto r = build_resonance_graph(in.graph, F);
  Json out{{"schema", kReportSchema}, {"face_set", F.ids()}, {"vertices", r.vertex_count()}};
  Json edges = Json::array();
  for (const auto& e : r.edges()) edges.push_back(Json{{"a", e.a}, {"b", e.b}, {"face", e.face}});
  out["edges"] = edges;
  Json comps = Json::array();
  for (const auto& h : components(r)) comps.push_back(Json{{"vertices", h.vertices}, {"faces", h.faces}});
  out["components"] = comps;
  if (!dot.empty()) {
    if (dot == "-") {
      std::cout << to_dot(r);
      return kExitPass;
    }
    std::ofstream os(dot);
    if (!os) throw Error(ErrorCode::InvalidInput, "cannot write " + dot);
    os << to_dot(r);
  }
  print(out, pretty);
  return kExitPass;
}

int cmd_zz(const std::string& file, const std::string& selector, bool pretty) {
  const auto in = load_input(file);
  const auto F = validate_even_face_set(in.graph, select_faces(in.graph, selector, in.instance));
  Json out{{"schema", kReportSchema}, {"face_set", F.ids()}, {"zz", polynomial_json(zz_polynomial(in.graph, F))}};
  print(out, pretty);
  return kExitPass;
}

int cmd_cubepoly(const std::string& file, const std::string& selector, bool pretty) {
  const auto in = load_input(file);
  const auto F = validate_even_face_set(in.graph, select_faces(in.graph, selector, in.instance));
  const auto r = build_resonance_graph(in.graph, F);
  Json out{{"schema", kReportSchema}, {"face_set", F.ids()}, {"cube", polynomial_json(cube_polynomial(r))}};
  print(out, pretty);
  return kExitPass;
}

int cmd_check(const std::string& file, const std::string& selector, const ReportOptions& options, bool pretty) {
  const auto in = load_input(file);
  const auto ids = select_faces(in.graph, selector, in.instance);
  std::string name;
  if (in.instance) {
    for (const auto& s : in.instance->face_sets)
      if (s.name == selector) name = selector;
  }
  const auto report = run_report(in.graph, ids, options, in.instance, name);
  print(report.json, pretty);
  return report.passed ? kExitPass : kExitViolation;
}

// "a..b" with a <= b.
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoull(text);
      return {v, v};
    }
    const auto a = std::stoull(text.substr(0, dots));
    const auto b = std::stoull(text.substr(dots + 2));
    if (a > b) throw Error(ErrorCode::InvalidInput, "empty seed range '" + text + "'");
    return {a, b};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidInput, "bad seed range '" + text + "', expected a..b");
  }
}

std::vector<GeneratorSize> sizes_up_to(GeneratorKind kind, int max_size) {
  std::vector<GeneratorSize> sizes;
  switch (kind) {
    case GeneratorKind::GridPlane:
      for (int a = 2; a <= max_size; ++a)
        for (int b = a; b <= max_size; ++b) sizes.push_back({a, b});
      break;
    case GeneratorKind::GridCylinder:
      for (int a = 3; a <= max_size; ++a)
        for (int b = 2; b <= max_size; ++b) sizes.push_back({a, b});
      break;
    case GeneratorKind::GridTorus:
      for (int a = 4; a <= max_size; a += 2)
        for (int b = a; b <= max_size; b += 2) sizes.push_back({a, b});
      break;
    case GeneratorKind::BenzenoidPatch:
      for (int a = 1; a <= max_size; ++a) sizes.push_back({a, 0});
      break;
  }
  return sizes;
}

int cmd_hunt(const std::string& kind_text, int max_size, const std::string& seeds, std::size_t median_limit) {
  const auto kind = parse_generator_kind(kind_text);
  const auto [first, last] = parse_seed_range(seeds);
  bool consistent = true;
  std::size_t instances = 0, components_checked = 0, non_median = 0;
  for (const auto& size : sizes_up_to(kind, max_size)) {
    for (auto seed = first; seed <= last; ++seed) {
      CorpusInstance inst;
      try {
        inst = generate_random(kind, size, seed);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::SizeBound) continue;
        throw;
      }
      ++instances;
      const auto& ids = inst.face_set("random").ids;
      bool ok = true;
      const auto survey = median_survey(inst.graph, ids, median_limit, ok);
      consistent = consistent && ok;
      for (const auto& c : survey) {
        if (c["median"].is_boolean()) {
          ++components_checked;
          non_median += !c["median"].get<bool>();
        }
      }
      Json line{{"schema", kReportSchema}, {"instance", inst.name}, {"face_set", ids}, {"consistent", ok},
                {"components", survey}};
      std::cout << line.dump() << "\n";
    }
  }
  Json summary{{"schema", kReportSchema},
               {"summary", Json{{"instances", instances},
                                {"components_checked", components_checked},
                                {"non_median_components", non_median},
                                {"consistent", consistent}}}};
  std::cout << summary.dump() << "\n";
  return consistent ? kExitPass : kExitViolation;
}

int cmd_corpus_list(bool pretty) {
  Json out = Json::array();
  for (const auto& inst : builtin_corpus()) {
    Json sets = Json::array();
    for (const auto& s : inst.face_sets) sets.push_back(s.name);
    out.push_back(Json{{"name", inst.name},
                       {"vertices", inst.graph.vertex_count()},
                       {"edges", inst.graph.edge_count()},
                       {"faces", inst.graph.face_count()},
                       {"face_sets", sets}});
  }
  print(out, pretty);
  return kExitPass;
}

int cmd_corpus_run(std::vector<std::string> names, unsigned jobs, bool pretty) {
  const auto corpus = builtin_corpus();
  struct Job {
    const CorpusInstance* instance;
    std::string face_set;
    Report report;
    std::string error;
  };
  std::vector<Job> work;
  for (const auto& inst : corpus) {
    if (!names.empty() && std::find(names.begin(), names.end(), inst.name) == names.end()) continue;
    for (const auto& s : inst.face_sets) work.push_back({&inst, s.name, {}, {}});
  }
  for (const auto& n : names) {
    if (std::none_of(corpus.begin(), corpus.end(), [&](const auto& i) { return i.name == n; }))
      throw Error(ErrorCode::UnknownName, "no bundled instance '" + n + "'");
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      try {
        work[i].report = run_report(*work[i].instance, work[i].face_set);
      } catch (const std::exception& e) {
        work[i].error = e.what();
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, work.size()); ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  // Work is already in name order; output follows it regardless of timing.
  bool passed = true;
  Json out = Json::array();
  for (const auto& job : work) {
    if (!job.error.empty()) {
      passed = false;
      out.push_back(Json{{"instance", job.instance->name}, {"face_set", job.face_set}, {"error", job.error}});
      continue;
    }
    passed = passed && job.report.passed;
    out.push_back(job.report.json);
  }
  print(out, pretty);
  return passed ? kExitPass : kExitViolation;
}

int cmd_corpus_export(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& inst : builtin_corpus()) {
    const auto path = std::filesystem::path(dir) / (inst.name + ".emb");
    std::ofstream os(path);
    if (!os) throw Error(ErrorCode::InvalidInput, "cannot write " + path.string());
    os << "# " << inst.name << "\n" << write_emb(inst.graph);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resonance graphs of surface-embedded graphs: structure checks and polynomials"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  const std::string file_help = ".emb file, or builtin:<name> for a bundled instance";
  const std::string faces_help = "Face set: all-even, all-even-except <id>, id list a,b,c, or a named set";

  std::string file, selector, dot;
  bool list = false;
  ReportOptions options;

  auto* faces = app.add_subcommand("faces", "Trace faces and report the Euler genus");
  faces->add_option("file", file, file_help)->required();

  auto* matchings = app.add_subcommand("matchings", "Enumerate perfect matchings");
  matchings->add_option("file", file, file_help)->required();
  matchings->add_flag("--list", list, "Print every matching as its edge ids");

  auto* resonance = app.add_subcommand("resonance", "Build the resonance graph");
  resonance->add_option("file", file, file_help)->required();
  resonance->add_option("--faces", selector, faces_help)->required();
  resonance->add_option("--dot", dot, "Write Graphviz output to this path ('-' for stdout)");

  auto* zz = app.add_subcommand("zz", "Clar covering polynomial");
  zz->add_option("file", file, file_help)->required();
  zz->add_option("--faces", selector, faces_help)->required();

  auto* cubepoly = app.add_subcommand("cubepoly", "Cube polynomial of the resonance graph");
  cubepoly->add_option("file", file, file_help)->required();
  cubepoly->add_option("--faces", selector, faces_help)->required();

  auto* check = app.add_subcommand("check", "Full structural report");
  check->add_option("file", file, file_help)->required();
  check->add_option("--faces", selector, faces_help)->required();
  check->add_flag("--allow-full-face-set", options.allow_full_face_set,
                  "Accept the set of all faces and report theorem violations instead of failing");
  check->add_option("--median-limit", options.median_limit, "Largest component for the median test");
  check->add_option("--partial-cube-limit", options.partial_cube_limit, "Largest component for the partial cube test");

  std::string kind, seeds = "0..9";
  int max_size = 4;
  std::size_t median_limit = 400;
  auto* hunt = app.add_subcommand("hunt", "Search generated instances for non-median components");
  hunt->add_option("--kind", kind, "grid-plane, grid-cylinder, grid-torus or benzenoid-patch")->required();
  hunt->add_option("--max-size", max_size, "Largest side length (hexagon count for benzenoid patches)");
  hunt->add_option("--seeds", seeds, "Seed range a..b");
  hunt->add_option("--median-limit", median_limit, "Largest component for the median test");

  auto* corpus = app.add_subcommand("corpus", "Bundled instances");
  corpus->require_subcommand(1);
  auto* corpus_list = corpus->add_subcommand("list", "List bundled instances and face sets");
  std::vector<std::string> names;
  unsigned jobs = 0;
  auto* corpus_run = corpus->add_subcommand("run", "Report on every face set of the bundled instances");
  corpus_run->add_option("names", names, "Instances to run (default: all)");
  corpus_run->add_option("--jobs", jobs, "Worker threads (default: hardware concurrency)");
  std::string out_dir;
  auto* corpus_export = corpus->add_subcommand("export", "Write every bundled instance as <dir>/<name>.emb");
  corpus_export->add_option("dir", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (*faces) return cmd_faces(file, pretty);
    if (*matchings) return cmd_matchings(file, list, pretty);
    if (*resonance) return cmd_resonance(file, selector, dot, pretty);
    if (*zz) return cmd_zz(file, selector, pretty);
    if (*cubepoly) return cmd_cubepoly(file, selector, pretty);
    if (*check) return cmd_check(file, selector, options, pretty);
    if (*hunt) return cmd_hunt(kind, max_size, seeds, median_limit);
    if (*corpus_list) return cmd_corpus_list(pretty);
    if (*corpus_run) return cmd_corpus_run(names, jobs, pretty);
    if (*corpus_export) return cmd_corpus_export(out_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
