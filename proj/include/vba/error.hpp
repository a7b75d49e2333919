#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vba {

/// Machine-readable failure categories. Every error thrown by the library
/// carries one of these so front ends can map failures to structured output
/// without parsing message strings.
enum class ErrorCode {
  unknown_value,
  unknown_argument,
  audience_mismatch,
  argument_set_mismatch,
  empty_profile,
  equal_values,
  rule_profile_mismatch,
  unjustified_input,
  invalid_explicit_table,
  no_justifying_vaf,
  enumeration_budget_exceeded,
  budget_exceeded,
  invariant_violation,
  parse_error,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::unknown_value: return "unknown-value";
    case ErrorCode::unknown_argument: return "unknown-argument";
    case ErrorCode::audience_mismatch: return "audience-mismatch";
    case ErrorCode::argument_set_mismatch: return "argument-set-mismatch";
    case ErrorCode::empty_profile: return "empty-profile";
    case ErrorCode::equal_values: return "equal-values";
    case ErrorCode::rule_profile_mismatch: return "rule-profile-mismatch";
    case ErrorCode::unjustified_input: return "unjustified-input";
    case ErrorCode::invalid_explicit_table: return "invalid-explicit-table";
    case ErrorCode::no_justifying_vaf: return "no-justifying-vaf";
    case ErrorCode::enumeration_budget_exceeded:
      return "enumeration-budget-exceeded";
    case ErrorCode::budget_exceeded: return "budget-exceeded";
    case ErrorCode::invariant_violation: return "invariant-violation";
    case ErrorCode::parse_error: return "parse-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Rejection of a document before any computation runs: malformed syntax,
/// duplicate ids, dangling references, unused values.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error(ErrorCode::parse_error, message) {}

 protected:
  ParseError(ErrorCode code, const std::string& message)
      : Error(code, message) {}
};

class InvariantViolation : public ParseError {
 public:
  explicit InvariantViolation(const std::string& message)
      : ParseError(ErrorCode::invariant_violation, message) {}
};

[[noreturn]] inline void throw_error(ErrorCode code,
                                     const std::string& message) {
  throw Error(code, message);
}

}  // namespace vba
