#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shacl2fol {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed RDF input. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column,
              const std::string& source = {})
      : Error((source.empty() ? "" : source + ":") + std::to_string(line) +
              ":" + std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// Turtle constructs outside the supported subset (named graphs, quoted
// triples).
class UnsupportedFeature : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

// A SHACL constraint component that the translation does not cover.
class UnsupportedComponent : public Error {
 public:
  explicit UnsupportedComponent(std::string component,
                                const std::string& detail = {})
      : Error("unsupported SHACL component " + component +
              (detail.empty() ? "" : ": " + detail)),
        component_(std::move(component)) {}

  const std::string& component() const { return component_; }

 private:
  std::string component_;
};

class MalformedShape : public Error {
 public:
  using Error::Error;
};

class CardinalityLimitExceeded : public Error {
 public:
  CardinalityLimitExceeded(std::size_t requested, std::size_t limit)
      : Error("cardinality " + std::to_string(requested) +
              " exceeds the configured limit " + std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  std::size_t requested() const { return requested_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

class InvalidOptions : public Error {
 public:
  using Error::Error;
};

class ProverNotFound : public Error {
 public:
  using Error::Error;
};

class ProverProtocolError : public Error {
 public:
  using Error::Error;
};

class RecursiveShapeGraph : public Error {
 public:
  using Error::Error;
};

}  // namespace shacl2fol
