#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperclique {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or coordinate file.
class ParseError : public Error {
 public:
  ParseError(std::string path, std::size_t line, const std::string& what)
      : Error(path + ":" + std::to_string(line) + ": " + what),
        path_(std::move(path)),
        line_(line) {}

  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

/// Adaptive quadrature did not reach the requested tolerance.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// Root bracketing failed while solving for a model parameter.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// Dataset download or cache failure.
class FetchError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on input that violates its precondition in a way
/// that indicates a bug upstream (for example an invalid edge ordering).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperclique
