#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rst {

// Bad or unsupported input data: malformed files, unmapped relations,
// documents that cannot be turned into a valid tree.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in one of the text formats, with a 1-based position.
class ParseError : public DataError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A broken internal contract (illegal transition, invalid tree handed to
// the oracle, template mismatch inside the scorer).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rst
