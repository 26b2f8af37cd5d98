#include "resgraph/emb_format.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "resgraph/error.hpp"

namespace resgraph {

namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

[[noreturn]] void syntax_error(int line, int column, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

int parse_int(const Token& t, int line) {
  int value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value < 0)
    syntax_error(line, t.column, "expected a nonnegative integer, got '" + std::string(t.text) + "'");
  return value;
}

}  // namespace

EmbeddedGraph parse_emb(std::string_view text) {
  std::optional<int> n;
  std::vector<std::optional<Edge>> edges;
  std::vector<std::optional<std::vector<EdgeId>>> rotations;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    const auto& head = tokens[0];
    if (!n) {
      if (head.text != "vertices") syntax_error(line_no, head.column, "expected 'vertices <n>' first");
      if (tokens.size() != 2) syntax_error(line_no, head.column, "'vertices' takes exactly one count");
      n = parse_int(tokens[1], line_no);
      rotations.assign(*n, std::nullopt);
    } else if (head.text == "vertices") {
      syntax_error(line_no, head.column, "duplicate 'vertices' line");
    } else if (head.text == "edge") {
      if (tokens.size() != 4 && tokens.size() != 5) syntax_error(line_no, head.column, "expected 'edge <eid> <u> <v> [+|-]'");
      const int id = parse_int(tokens[1], line_no);
      Edge e{parse_int(tokens[2], line_no), parse_int(tokens[3], line_no), +1};
      if (tokens.size() == 5) {
        if (tokens[4].text == "+") e.sign = +1;
        else if (tokens[4].text == "-") e.sign = -1;
        else syntax_error(line_no, tokens[4].column, "sign must be '+' or '-'");
      }
      if (e.u >= *n) syntax_error(line_no, tokens[2].column, "vertex out of range");
      if (e.v >= *n) syntax_error(line_no, tokens[3].column, "vertex out of range");
      if (static_cast<std::size_t>(id) >= edges.size()) edges.resize(id + 1);
      if (edges[id]) syntax_error(line_no, tokens[1].column, "duplicate edge id " + std::to_string(id));
      edges[id] = e;
    } else if (head.text == "rot") {
      if (tokens.size() < 3 || tokens[2].text != ":") syntax_error(line_no, head.column, "expected 'rot <v> : <eid> ...'");
      const int v = parse_int(tokens[1], line_no);
      if (v >= *n) syntax_error(line_no, tokens[1].column, "vertex out of range");
      if (rotations[v]) syntax_error(line_no, head.column, "duplicate rotation for vertex " + std::to_string(v));
      std::vector<EdgeId> rot;
      for (std::size_t i = 3; i < tokens.size(); ++i) rot.push_back(parse_int(tokens[i], line_no));
      rotations[v] = std::move(rot);
    } else {
      syntax_error(line_no, head.column, "unknown directive '" + std::string(head.text) + "'");
    }
    if (end == text.size()) break;
  }

  if (!n) throw Error(ErrorCode::SyntaxError, "line 1, column 1: missing 'vertices <n>'");
  std::vector<Edge> dense;
  for (std::size_t id = 0; id < edges.size(); ++id) {
    if (!edges[id]) throw Error(ErrorCode::SemanticError, "edge ids are not dense: " + std::to_string(id) + " missing");
    dense.push_back(*edges[id]);
  }
  std::vector<std::vector<EdgeId>> rots;
  for (int v = 0; v < *n; ++v) {
    if (!rotations[v]) throw Error(ErrorCode::SemanticError, "vertex " + std::to_string(v) + " has no rotation line");
    rots.push_back(std::move(*rotations[v]));
  }
  try {
    return EmbeddedGraph::build(*n, std::move(dense), std::move(rots));
  } catch (const Error& e) {
    throw Error(ErrorCode::SemanticError, e.what());
  }
}

std::string write_emb(const EmbeddedGraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    out << "edge " << e << " " << ed.u << " " << ed.v << " " << (ed.sign > 0 ? "+" : "-") << "\n";
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "rot " << v << " :";
    for (auto e : g.rotation(v)) out << " " << e;
    out << "\n";
  }
  return out.str();
}

EmbeddedGraph read_emb_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_emb(buf.str());
}

}  // namespace resgraph
