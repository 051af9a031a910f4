#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ndga {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `offset` is a byte offset into the parsed string
/// and `line` a 1-based line number when the text came from a file (0 if
/// not applicable).
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset, int line = 0)
      : Error(what), offset_(offset), line_(line) {}

  std::size_t offset() const noexcept { return offset_; }
  int line() const noexcept { return line_; }

private:
  std::size_t offset_;
  int line_;
};

/// Operands whose base dimension, fiber shape, or depth profile disagree.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// A value outside the domain of an operation (odd pairing set, singular
/// matrix, unassigned coordinate, negative power of a sum, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Input that parsed but violates a structural invariant (non-symmetric
/// metric, d^N != 0, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

} // namespace ndga
