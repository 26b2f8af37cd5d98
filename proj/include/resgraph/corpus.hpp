#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resgraph/embedded_graph.hpp"

namespace resgraph {

struct NamedFaceSet {
  std::string name;
  std::vector<FaceId> ids;
};

// Frozen values a fixture must reproduce for one of its face sets.
struct Expectation {
  std::string face_set;
  std::size_t matchings = 0;
  std::size_t resonance_edges = 0;
  std::size_t components = 0;
  std::vector<std::uint64_t> zz;  // lowest degree first
};

struct CorpusInstance {
  std::string name;
  EmbeddedGraph graph;
  std::vector<NamedFaceSet> face_sets;
  std::map<FaceId, std::string> face_names;  // display names such as "f1" or "h7"
  std::map<std::string, std::string> metadata;
  std::vector<Expectation> expected;

  const NamedFaceSet& face_set(const std::string& name) const;  // throws UnknownName
  FaceId face_named(const std::string& label) const;              // throws UnknownName
};

/// Embedding helpers.
EmbeddedGraph plane_graph(const std::vector<std::pair<double, double>>& coordinates,
                          const std::vector<std::pair<VertexId, VertexId>>& edges);
EmbeddedGraph cycle_plane(int n);
EmbeddedGraph grid_plane(int rows, int cols);
EmbeddedGraph grid_cylinder(int around, int along);
EmbeddedGraph grid_torus(int rows, int cols);
// Hexagons given in axial coordinates (q, r); rotations follow the drawing.
EmbeddedGraph benzenoid(const std::vector<std::pair<int, int>>& hexagons);
EmbeddedGraph projective_k4();
EmbeddedGraph disjoint_union(const EmbeddedGraph& a, const EmbeddedGraph& b);

std::vector<CorpusInstance> builtin_corpus();
const CorpusInstance& builtin_instance(const std::string& name);  // throws UnknownName

enum class GeneratorKind { GridPlane, GridCylinder, GridTorus, BenzenoidPatch };

GeneratorKind parse_generator_kind(const std::string& text);  // throws UnknownName
std::string to_string(GeneratorKind kind);

struct GeneratorSize {
  int a = 0;
  int b = 0;  // unused for benzenoid patches (a = hexagon count)
};

GeneratorSize parse_generator_size(const std::string& text);  // "4x6" or "5"

inline constexpr std::uint64_t kMaxGeneratedMatchings = 10000;

/// Deterministic in (kind, size, seed). The instance carries the face sets
/// "random" (a seeded proper subset of the even faces) and
/// "all-even-minus-one". Throws SizeBound when the size is out of range or
/// the graph has more than kMaxGeneratedMatchings perfect matchings.
CorpusInstance generate_random(GeneratorKind kind, GeneratorSize size, std::uint64_t seed);

/// Face-set selector: "all-even", "all-even-except <id>", "<id>,<id>,...",
/// or the name of one of the instance's face sets.
std::vector<FaceId> select_faces(const EmbeddedGraph& g, const std::string& selector,
                                 const CorpusInstance* instance = nullptr);

}  // namespace resgraph
