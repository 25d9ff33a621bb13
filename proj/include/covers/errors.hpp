#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace covers {

// Rejection of raw input data. The code names are part of the library's
// error contract and appear verbatim in messages so callers (and the CLI)
// can match on them.
class ValidationError : public std::runtime_error {
 public:
  enum class Code {
    RejectModulus,
    RejectTooFewBranchPoints,
    RejectLengthMismatch,
    RejectZeroMonodromy,
    RejectSumNonzero,
    RejectNonGenerating,
    AutGroupTooLarge,
    TrivialCharacter,
    BadGenus,
  };

  ValidationError(Code code, const std::string& detail)
      : std::runtime_error(std::string(code_name(code)) + ": " + detail),
        code_(code) {}

  Code code() const { return code_; }

  static const char* code_name(Code code) {
    switch (code) {
      case Code::RejectModulus: return "RejectModulus";
      case Code::RejectTooFewBranchPoints: return "RejectTooFewBranchPoints";
      case Code::RejectLengthMismatch: return "RejectLengthMismatch";
      case Code::RejectZeroMonodromy: return "RejectZeroMonodromy";
      case Code::RejectSumNonzero: return "RejectSumNonzero";
      case Code::RejectNonGenerating: return "RejectNonGenerating";
      case Code::AutGroupTooLarge: return "AutGroupTooLarge";
      case Code::TrivialCharacter: return "TrivialCharacter";
      case Code::BadGenus: return "BadGenus";
    }
    return "ValidationError";
  }

 private:
  Code code_;
};

// Violation of an identity that holds for every valid datum. Reaching this
// means a bug in the library, not bad input; the CLI maps it to its own
// exit code.
class InternalInvariantError : public std::logic_error {
 public:
  explicit InternalInvariantError(const std::string& detail)
      : std::logic_error("InternalInequalityViolation: " + detail) {}
};

// Error in the datum text syntax. `position` is a 0-based byte offset into
// the original input string.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& reason)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + reason),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace covers
