#pragma once

#include <stdexcept>
#include <string>

namespace clusterlab {

/// Base class for all errors raised by the library. `code()` is a short
/// machine-readable identifier used by the CLI and the HTTP service.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Operands built over different variable tables.
class TableMismatch : public Error {
 public:
  explicit TableMismatch(const std::string& what) : Error("table_mismatch", what) {}
};

/// No Laurent quotient exists. Inside the mutation engine this is an
/// internal inconsistency: the Laurent phenomenon makes every exchange exact.
class NonExactDivision : public Error {
 public:
  explicit NonExactDivision(const std::string& what) : Error("non_exact_division", what) {}
};

class InvalidQuiver : public Error {
 public:
  explicit InvalidQuiver(const std::string& what) : Error("invalid_quiver", what) {}
};

class InvalidVertex : public Error {
 public:
  explicit InvalidVertex(const std::string& what) : Error("invalid_vertex", what) {}
};

class NotAcyclic : public Error {
 public:
  explicit NotAcyclic(const std::string& what) : Error("not_acyclic", what) {}
};

class NotFound : public Error {
 public:
  explicit NotFound(const std::string& what) : Error("not_found", what) {}
};

class Disconnected : public Error {
 public:
  explicit Disconnected(const std::string& what) : Error("disconnected", what) {}
};

/// Text or JSON input that could not be parsed. Line and column are 1-based;
/// zero means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("parse_error", format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Violation of an internal consistency check (e.g. a projective variable
/// whose denominator does not match its dimension vector).
class InternalFault : public Error {
 public:
  explicit InternalFault(const std::string& what) : Error("internal_fault", what) {}
};

}  // namespace clusterlab
