#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radgen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input; `offset` is the byte position in the source text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// A Groebner computation ran past its pair-reduction budget. Callers must
// treat the question as undecided, never as a negative answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Hypothesis (0) of the intersection construction failed at a 1-based index.
class HypothesisViolation : public InvalidInput {
 public:
  HypothesisViolation(const std::string& message, std::size_t index)
      : InvalidInput(message), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace radgen
