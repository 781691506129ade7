#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opgroup {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  kSyntax,
  kUnbalancedBracket,
  kInvalidToken,
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t offset, const std::string& what)
      : Error(what + " at byte " + std::to_string(offset)), kind_(kind), offset_(offset) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  ParseErrorKind kind_;
  std::size_t offset_;
};

/// A generator occurring in a word has no image under the assignment.
class UnassignedGenerator : public Error {
 public:
  explicit UnassignedGenerator(std::string symbol)
      : Error("unassigned generator '" + symbol + "'"), symbol_(std::move(symbol)) {}

  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

/// An argument that must be a Rota-Baxter word is not one.
class NotRbWord : public Error {
 public:
  using Error::Error;
};

/// The diamond recursion exceeded its step limit.
class RecursionGuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A finite group, action, subgroup or operator failed validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operator identity fails; carries the first violating pair.
class LawViolation : public ValidationError {
 public:
  LawViolation(const std::string& what, std::size_t first, std::size_t second)
      : ValidationError(what), first_(first), second_(second) {}

  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// A finite search would exceed its configured budget or size bound.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace opgroup
