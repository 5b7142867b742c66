#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfi {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TypeError : public Error {
 public:
  TypeError(std::string location, std::string expected, std::string found)
      : Error("type error at " + location + ": expected " + expected + ", found " + found),
        location(std::move(location)),
        expected(std::move(expected)),
        found(std::move(found)) {}
  std::string location;
  std::string expected;
  std::string found;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(std::string name)
      : Error("unbound variable " + name), name(std::move(name)) {}
  std::string name;
};

class StepBudgetExceeded : public Error {
 public:
  explicit StepBudgetExceeded(std::size_t budget)
      : Error("normalization exceeded step budget of " + std::to_string(budget)), budget(budget) {}
  std::size_t budget;
};

/// Node paths are sequences of child indices from the root (0-based).
std::string path_string(const std::vector<int>& path);

class RuleMismatch : public Error {
 public:
  RuleMismatch(std::vector<int> path, std::string detail)
      : Error("rule mismatch at " + path_string(path) + ": " + detail),
        path(std::move(path)),
        detail(std::move(detail)) {}
  std::vector<int> path;
  std::string detail;
};

class EigenvariableViolation : public Error {
 public:
  EigenvariableViolation(std::vector<int> path, std::string name)
      : Error("eigenvariable " + name + " occurs in the conclusion at " + path_string(path)),
        path(std::move(path)),
        name(std::move(name)) {}
  std::vector<int> path;
  std::string name;
};

class RegularityViolation : public Error {
 public:
  RegularityViolation(std::string name, std::string detail)
      : Error("proof is not regular: eigenvariable " + name + " " + detail), name(std::move(name)) {}
  std::string name;
};

class CaptureRisk : public Error {
 public:
  explicit CaptureRisk(std::string name)
      : Error("cannot substitute for " + name + ": it is an eigenvariable of the proof"),
        name(std::move(name)) {}
  std::string name;
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t size)
      : Error("occurrence index " + std::to_string(index) + " out of range 1.." + std::to_string(size)),
        index(index),
        size(size) {}
  std::size_t index;
  std::size_t size;
};

class NonClosedTerm : public Error {
 public:
  explicit NonClosedTerm(std::string name)
      : Error("free variable " + name + " survives normalization"), name(std::move(name)) {}
  std::string name;
};

class MalformedNormalForm : public Error {
 public:
  explicit MalformedNormalForm(std::string shape)
      : Error("unexpected normal-form shape: " + shape), shape(std::move(shape)) {}
  std::string shape;
};

class NotHerbrandGoal : public Error {
 public:
  explicit NotHerbrandGoal(std::string detail)
      : Error("not a Herbrand goal: " + detail) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t col, std::string expected)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": expected " + expected),
        line(line),
        col(col),
        expected(std::move(expected)) {}
  std::size_t line;
  std::size_t col;
  std::string expected;
};

}  // namespace hfi
