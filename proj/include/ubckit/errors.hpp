#pragma once

#include <stdexcept>
#include <string>

namespace ubckit {

/// Malformed or inconsistent input supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A parse failure, carrying the 1-based line number of the offending line.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An invariant that the library itself is responsible for was violated.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Two consecutive differentials compose to a nonzero map.
class NonComplexError : public std::runtime_error {
 public:
  NonComplexError(int degree, std::string row, std::string col, std::string value)
      : std::runtime_error("composite of differentials at degree " + std::to_string(degree) +
                           " is nonzero at (" + row + ", " + col + ") = " + value),
        degree_(degree),
        row_(std::move(row)),
        col_(std::move(col)),
        value_(std::move(value)) {}

  int degree() const { return degree_; }
  const std::string& row() const { return row_; }
  const std::string& col() const { return col_; }
  const std::string& value() const { return value_; }

 private:
  int degree_;
  std::string row_;
  std::string col_;
  std::string value_;
};

class NotACycleError : public InputError {
 public:
  explicit NotACycleError(const std::string& what) : InputError(what) {}
};

}  // namespace ubckit
