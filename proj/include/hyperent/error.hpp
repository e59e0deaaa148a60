#pragma once

#include <stdexcept>
#include <string>

namespace hyperent {

// Every failure mode exposed by the library. CLI front-ends print the
// symbolic name so scripts can match on it.
enum class Errc {
  NonUniformEdge,
  DuplicateEdge,
  EmptyEdgeList,
  SyntaxError,
  TooLarge,
  TargetInsideEdge,
  SourceNotInEdge,
  ResultNotSimple,
  NonPositiveWeight,
  LengthMismatch,
  SumMismatch,
  BadParameters,
  UnrealizableFamily,
  NotATree,
  LimitExceeded,
  EmptyInput,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hyperent
