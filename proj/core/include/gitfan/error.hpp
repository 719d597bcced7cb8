#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gitfan {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t col)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
        line_(line),
        col_(col) {}
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

/// Well-formed input that fails a semantic check.
class ValidationError : public Error {
 public:
  enum class Kind {
    Shape,
    FullRank,
    NotHomogeneous,
    MonomialGenerator,
    ContainsMonomial,
    UnknownVariable,
    BadPermutation,
    BadSigns,
    NotASymmetry,
    NotInvariant,
    DataLength,
    Digest,
  };
  ValidationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  [[nodiscard]] Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string to_string(ValidationError::Kind kind);

/// Failure inside an algorithm on valid input.
class ComputationError : public Error {
 public:
  enum class Kind {
    NoSolution,
    HypothesisViolated,
    NotHomogeneous,
    NonPositiveWeight,
    BoundExceeded,
    NotASymmetry,
    OutsideSupport,
    NoFullDimStart,
    NoNeighbor,
    NoUniqueFixedOrbit,
    DimensionMismatch,
    EmptyCone,
    Checkpoint,
  };
  ComputationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  [[nodiscard]] Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace gitfan
