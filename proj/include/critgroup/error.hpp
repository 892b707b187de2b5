#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace critgroup {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kDisconnected,
  kNonzeroDegree,
  kNotAutomorphism,
  kNonHarmonic,
  kOrbitSize,
  kLabelingImpossible,
  kPrecondition,
  kIllDefinedHom,
  kInfiniteGroup,
  kParse,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception; `code()` lets
// callers (the CLI in particular) map failures onto stable exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace critgroup
