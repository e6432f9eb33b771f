#pragma once

#include <stdexcept>
#include <string>

namespace evoder {

/// Base of every error the library throws. `kind()` is a stable identifier
/// suitable for machine-parsable diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

enum class ParseErrorKind { MalformedHeader, MalformedRational, ShapeMismatch, DimensionTooLarge };

const char* to_string(ParseErrorKind kind);

/// Raised while reading a matrix file. Row and entry are 1-based; zero when
/// the error is not tied to a particular row or entry.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, const std::string& message, int row = 0, int entry = 0)
      : Error(to_string(kind), message), parse_kind_(kind), row_(row), entry_(entry) {}

  ParseErrorKind parse_kind() const { return parse_kind_; }
  int row() const { return row_; }
  int entry() const { return entry_; }

 private:
  ParseErrorKind parse_kind_;
  int row_;
  int entry_;
};

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& message) : Error("ShapeMismatch", message) {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& message) : Error("IndexOutOfRange", message) {}
};

class GenerationExhausted : public Error {
 public:
  explicit GenerationExhausted(const std::string& message) : Error("GenerationExhausted", message) {}
};

}  // namespace evoder
