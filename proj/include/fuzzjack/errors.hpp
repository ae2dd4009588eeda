#pragma once

#include <stdexcept>
#include <string>

namespace fuzzjack {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GridMismatch : public Error {
 public:
  GridMismatch() : Error("fuzzy numbers are defined on different alpha grids") {}
};

class GHDifferenceUndefined : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class SearchExhausted : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class UnknownCatalogEntry : public Error {
 public:
  explicit UnknownCatalogEntry(const std::string& name)
      : Error("unknown catalog entry: " + name) {}
};

class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document; the message starts with the offending field path.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IOError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzjack
