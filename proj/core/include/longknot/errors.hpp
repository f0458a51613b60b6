#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace longknot {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different variable sets.
class VariableSetError : public Error {
 public:
  using Error::Error;
};

/// gcd requested on genuinely multivariate input.
class UnsupportedGcdError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Exponent arithmetic left the int32 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class DivisionError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A switch axiom failed; `axiom()` names it.
class InvalidSwitchError : public Error {
 public:
  InvalidSwitchError(std::string axiom, const std::string& detail)
      : Error("invalid switch: " + axiom + (detail.empty() ? "" : ": " + detail)),
        axiom_(std::move(axiom)) {}
  const std::string& axiom() const noexcept { return axiom_; }

 private:
  std::string axiom_;
};

/// Text that does not conform to a grammar. Line and column are 1-based;
/// zero means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line ? what + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"
                   : what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Structured input is well formed but misses or misuses a field.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Virtual/flat mismatch between diagrams, switches or operations.
class KindError : public Error {
 public:
  using Error::Error;
};

}  // namespace longknot
