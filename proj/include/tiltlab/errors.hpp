#pragma once

#include <stdexcept>
#include <string>

namespace tiltlab {

// Every library failure maps onto one CLI exit code.
enum class ExitCode : int {
  ok = 0,
  invalid_input = 2,
  precondition = 3,
  overflow = 4,
  internal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

/// Malformed quiver text/JSON. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ExitCode::invalid_input,
              line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Structurally invalid input: cycles, disconnected quivers, size mismatches.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ExitCode::invalid_input, what) {}
};

/// The input is well formed but outside the hypotheses an operation needs
/// (unique source, minimum degree, l <= 1 completion class, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ExitCode::precondition, what) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what)
      : Error(ExitCode::overflow, what) {}
};

/// Two independent computations disagreed. Always a bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ExitCode::internal, what) {}
};

}  // namespace tiltlab
