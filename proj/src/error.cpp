#include "reebsym/error.hpp"

namespace reebsym {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::UnsupportedAtom: return "UnsupportedAtom";
    case ErrorCode::CycleBelow: return "CycleBelow";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::NonOrientable: return "NonOrientable";
    case ErrorCode::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::NonManifoldVertex: return "NonManifoldVertex";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonConstantBoundary: return "NonConstantBoundary";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::Io: return "IoError";
  }
  return "Error";
}

}  // namespace reebsym
