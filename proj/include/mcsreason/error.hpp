#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcsreason {

enum class ErrorCode {
  SyntaxError,
  UnsupportedConstruct,
  TrivialAxiom,
  InconsistentPremises,
  BudgetExceeded,
  TooLarge,
  UnknownAxiom,
  UnknownSubset,
  NotMember,
  EmptySubset,
  Untranslatable,
  EmptySentence,
  NoTriples,
  MissingAxiom,
  ArityMismatch,
  MalformedRecord,
  ZeroVector,
  InvalidArgument,
  NoConflictTargets,
  GoldMismatch,
  MalformedQuery,
};

const char* to_string(ErrorCode code);

// All domain errors raised by the library. The code is stable and is what
// tests and the Python bindings key on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mcsreason
