#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace frameforge {

/// Failure categories surfaced by the library. The CLI maps these onto
/// exit codes; tests match on them.
enum class Errc {
  LengthMismatch,
  ValueOutOfRange,
  TooLarge,
  UnknownSpec,
  RetryExhausted,
  SyntaxError,
  UnboundVariable,
  UnknownOperation,
  BudgetExceeded,
  NotCongruential,
  NotClosed,
  TrivialFrame,
  NotSwitching,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Syntax error with source position and the token set that would have
/// been accepted at that point.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg,
             std::vector<std::string> expected = {})
      : Error(Errc::SyntaxError, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + msg),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

}  // namespace frameforge
