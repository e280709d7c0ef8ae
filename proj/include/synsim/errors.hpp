#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace synsim {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input line (CoNLL-U or JSONL). Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Dependency structure is not a single rooted tree.
class StructureError : public Error {
 public:
  StructureError(std::string sentence_id, const std::string& what)
      : Error("sentence " + sentence_id + ": " + what),
        sentence_id_(std::move(sentence_id)) {}
  const std::string& sentence_id() const { return sentence_id_; }

 private:
  std::string sentence_id_;
};

class EmptyInputError : public Error {
 public:
  EmptyInputError() : Error("empty input") {}
};

// Input is valid but cannot be handled by the requested operation,
// e.g. a heuristic flat parse handed to the clause finder.
class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

class ContractViolation : public Error {
 public:
  using Error::Error;
};

// A similarity or accuracy would divide by zero.
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

// Corpus record is missing a required field or has the wrong type.
class SchemaError : public Error {
 public:
  SchemaError(std::size_t line, std::string field, const std::string& what)
      : Error("line " + std::to_string(line) + ": field '" + field + "': " + what),
        line_(line),
        field_(std::move(field)) {}
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Raised when an internal bound that should be unreachable is hit.
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace synsim
