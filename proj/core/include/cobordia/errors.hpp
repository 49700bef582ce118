#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cobordia {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A pairing, morphism or permutation violating its structural invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// compose(h, g) with g.cod != h.dom. Carries both boundary words as text.
class BoundaryMismatchError : public Error {
 public:
  BoundaryMismatchError(const std::string& inner_cod, const std::string& outer_dom)
      : Error("boundary mismatch: cannot compose through \"" + inner_cod +
              "\" vs \"" + outer_dom + "\""),
        inner_cod_(inner_cod),
        outer_dom_(outer_dom) {}

  const std::string& inner_cod() const noexcept { return inner_cod_; }
  const std::string& outer_dom() const noexcept { return outer_dom_; }

 private:
  std::string inner_cod_;
  std::string outer_dom_;
};

/// JSON input not matching an interchange schema; `path()` locates the problem.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : Error(path + ": " + message), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Work refused because it would exceed a configured resource bound.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic left the representable range. Never silently wrapped.
class OverflowError : public ResourceLimitError {
 public:
  using ResourceLimitError::ResourceLimitError;
};

/// Array legs or dimensions that do not line up.
class TypeMismatchError : public Error {
 public:
  using Error::Error;
};

/// Permutations of different sizes where equal sizes are required.
class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

/// Law-suite id that names no suite.
class UnknownSuiteError : public Error {
 public:
  using Error::Error;
};

}  // namespace cobordia
