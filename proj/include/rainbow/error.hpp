#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbow {

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  SyntaxError,
  EmptyGraph,
  OverlappingSets,
  NoEdges,
  BadK,
  PivotInA,
  PivotNotAdjacent,
  NotDependent,
  EmptySet,
  BadTemplate,
  NotComplete,
  PathTooShort,
  NotRainbow,
  NotAPath,
  BadParams,
  RepairFailed,
  MissingParam,
  IndeterminateSideCondition,
  SpaceTooLarge,
  UnknownName,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-checkable code.
// `line` is set for .ecg syntax errors (1-based), 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace rainbow
