#pragma once

#include <stdexcept>
#include <string>

namespace clumpstat {

// Word-set / model validation failures (CLI exit code 3).
class ValidationError : public std::runtime_error {
 public:
  enum class Kind { MinLength, NotReduced, Duplicate, BadSymbol, BadProbability };

  ValidationError(Kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Model-file syntax errors (CLI exit code 2).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

// Arithmetic failures: division by zero function, singular matrices,
// series extraction at a singular point, missing real root.
class MathError : public std::runtime_error {
 public:
  enum class Kind { DivisionByZero, SingularMatrix, SingularAtZero, NoRealRoot, Internal };

  MathError(Kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Exhaustive enumeration over |A|^n texts refused (CLI exit code 3).
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace clumpstat
