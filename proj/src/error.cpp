#include "resgraph/error.hpp"

namespace resgraph {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::ParallelEdge: return "ParallelEdge";
    case ErrorCode::RotationMismatch: return "RotationMismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::NotEvenFace: return "NotEvenFace";
    case ErrorCode::UnknownFaceId: return "UnknownFaceId";
    case ErrorCode::NotACycleBoundary: return "NotACycleBoundary";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::UnknownFaceClass: return "UnknownFaceClass";
    case ErrorCode::NonBipartiteQuotient: return "NonBipartiteQuotient";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::SizeBound: return "SizeBound";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "Error";
}

}  // namespace resgraph
