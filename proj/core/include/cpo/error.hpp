#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cpo {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the domain an operation accepts, e.g. a point
/// outside the spatial area or strictly inside an obstacle. `index()` names
/// the offending element when one exists.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what,
                      std::optional<std::size_t> index = std::nullopt)
      : Error(what), index_(index) {}

  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  std::optional<std::size_t> index_;
};

/// Malformed text input. Line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A polygon violates its invariants (too few vertices, self-intersection,
/// zero area).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what,
                           std::optional<std::size_t> polygon = std::nullopt)
      : Error(what), polygon_(polygon) {}

  std::optional<std::size_t> polygon() const noexcept { return polygon_; }

 private:
  std::optional<std::size_t> polygon_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cpo
