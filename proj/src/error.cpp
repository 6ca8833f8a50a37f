#include "rainbow/error.hpp"

namespace rainbow {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::PivotInA: return "PivotInA";
    case ErrorCode::PivotNotAdjacent: return "PivotNotAdjacent";
    case ErrorCode::NotDependent: return "NotDependent";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::BadTemplate: return "BadTemplate";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::PathTooShort: return "PathTooShort";
    case ErrorCode::NotRainbow: return "NotRainbow";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::RepairFailed: return "RepairFailed";
    case ErrorCode::MissingParam: return "MissingParam";
    case ErrorCode::IndeterminateSideCondition: return "IndeterminateSideCondition";
    case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      line_(line) {}

}  // namespace rainbow
