#include "hyperent/error.hpp"

namespace hyperent {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonUniformEdge: return "NonUniformEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::EmptyEdgeList: return "EmptyEdgeList";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TargetInsideEdge: return "TargetInsideEdge";
    case Errc::SourceNotInEdge: return "SourceNotInEdge";
    case Errc::ResultNotSimple: return "ResultNotSimple";
    case Errc::NonPositiveWeight: return "NonPositiveWeight";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::SumMismatch: return "SumMismatch";
    case Errc::BadParameters: return "BadParameters";
    case Errc::UnrealizableFamily: return "UnrealizableFamily";
    case Errc::NotATree: return "NotATree";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::EmptyInput: return "EmptyInput";
  }
  return "UnknownError";
}

}  // namespace hyperent
