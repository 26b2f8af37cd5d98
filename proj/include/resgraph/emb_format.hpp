#pragma once

#include <string>
#include <string_view>

#include "resgraph/embedded_graph.hpp"

namespace resgraph {

// Line-oriented ".emb" text:
//
//   vertices <n>
//   edge <eid> <u> <v> [+|-]
//   rot <v> : <eid> <eid> ...
//
// '#' starts a comment. Edge ids must be exactly 0..m-1 and every vertex
// needs one rot line. Syntax problems throw SyntaxError ("line L, column C");
// structural problems throw SemanticError.
EmbeddedGraph parse_emb(std::string_view text);

// Writes edges in id order with explicit signs and rotations as stored, so
// parse_emb(write_emb(g)) == g.
std::string write_emb(const EmbeddedGraph& g);

EmbeddedGraph read_emb_file(const std::string& path);

}  // namespace resgraph
