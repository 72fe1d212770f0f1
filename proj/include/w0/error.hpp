#pragma once

#include <stdexcept>
#include <string>

namespace w0 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data that is structurally invalid (bad face maps, dangling
/// references, inconsistent containment, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Matrix shapes that cannot be composed.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A sequence of differentials with d^{n+1} d^n != 0.
class NotAComplex : public Error {
 public:
  NotAComplex(std::size_t degree, const std::string& what)
      : Error(what), degree_(degree) {}

  std::size_t degree() const noexcept { return degree_; }

 private:
  std::size_t degree_;
};

/// Parse failure; path() is a JSON-pointer-like location inside the document.
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace w0
