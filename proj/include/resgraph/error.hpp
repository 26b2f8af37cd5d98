#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace resgraph {

enum class ErrorCode {
  LoopEdge,
  ParallelEdge,
  RotationMismatch,
  InvalidInput,
  DisconnectedGraph,
  NotEvenFace,
  UnknownFaceId,
  NotACycleBoundary,
  NotAlternating,
  NotACycle,
  UnknownFaceClass,
  NonBipartiteQuotient,
  SyntaxError,
  SemanticError,
  SizeBound,
  UnknownName,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace resgraph
