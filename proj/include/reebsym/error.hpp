#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reebsym {

enum class ErrorCode {
  Syntax,
  CapExceeded,
  InvalidArgument,
  InvalidGraph,
  UnsupportedAtom,
  CycleBelow,
  SizeCap,
  Parse,
  NonOrientable,
  NonManifoldEdge,
  NonManifoldVertex,
  Disconnected,
  NonConstantBoundary,
  CountMismatch,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a stable machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& detail)
      : Error(ErrorCode::Syntax,
              detail + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace reebsym
