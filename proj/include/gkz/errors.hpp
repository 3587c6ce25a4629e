#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gkz {

// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A matrix violates a hypothesis required by a hypergeometric operation
// (nonzero columns, full row rank). hypothesis() names the violated condition.
class InvalidMatrix : public Error {
 public:
  InvalidMatrix(std::string hypothesis, const std::string& what)
      : Error(what), hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

// A transversality instance whose point does not lie on Var(Lxξ).
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

// A point with a vanishing ξ-coordinate was handed to the kernel lift.
class OrbitBoundaryPoint : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. line() and column() are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gkz
