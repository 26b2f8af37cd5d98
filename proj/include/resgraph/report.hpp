#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "resgraph/corpus.hpp"
#include "resgraph/embedded_graph.hpp"

namespace resgraph {

inline constexpr int kReportSchema = 1;

struct ReportOptions {
  // Without this flag a face set equal to all faces is an input error; with
  // it (and always for bundled fixtures) theorem checks are reported as
  // violations instead of failing the run.
  bool allow_full_face_set = false;
  // Components larger than these are marked "skipped" for the cubic-time
  // testers.
  std::size_t partial_cube_limit = 1500;
  std::size_t median_limit = 400;
  // Hypercube enumeration and the cover bijection are skipped above this
  // many matchings.
  std::size_t polynomial_limit = 10000;
};

struct Report {
  nlohmann::ordered_json json;
  bool passed = true;                   // every asserted check holds
  std::vector<std::string> violations;  // theorem checks that failed
};

/// Every structural check for one (graph, face set) pair. The JSON is
/// deterministic: equal inputs give byte-identical dumps. Throws
/// InvalidInput when the face set is all faces and the options forbid it.
Report run_report(const EmbeddedGraph& g, const std::vector<FaceId>& face_ids, const ReportOptions& options = {},
                  const CorpusInstance* instance = nullptr, const std::string& face_set_name = "");

/// Looks up the named face set (throws UnknownName) and compares the
/// instance's frozen expectations, if any.
Report run_report(const CorpusInstance& instance, const std::string& face_set_name, const ReportOptions& options = {});

/// Median-graph status of every component, for conjecture hunting.
nlohmann::ordered_json median_survey(const EmbeddedGraph& g, const std::vector<FaceId>& face_ids,
                                     std::size_t median_limit, bool& consistent);

}  // namespace resgraph
