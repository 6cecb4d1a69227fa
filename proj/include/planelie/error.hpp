#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace planelie {

enum class ErrorKind {
  ChartMismatch,
  NonMonomial,
  IrrationalCoefficient,
  NonSubstitutableTerm,
  NotClosed,
  NotSubspace,
  ZeroField,
  NotHighestWeight,
  NotInvariant,
  UnsupportedSpectrum,
  InvalidArgument,
  DivisionByZero,
  ParseError,
  MixedDirections,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the engine carries a kind so callers (and the CLI)
// can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected,
             const std::string& what)
      : Error(ErrorKind::ParseError, format(line, column, expected, what)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

 private:
  static std::string format(int line, int column,
                            const std::vector<std::string>& expected,
                            const std::string& what);

  int line_;
  int column_;
  std::vector<std::string> expected_;
};

}  // namespace planelie
