#ifndef RESCONV_ERRORS_HPP_
#define RESCONV_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resconv {

/// Malformed or out-of-contract input (bad table, unnormalized vector, unknown name).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sequential or parallel composition attempted between mismatched types.
class CompositionError : public InputError {
 public:
  using InputError::InputError;
};

/// Circuit DSL syntax or typing error, with a 1-based source position.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string &what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace resconv

#endif  // RESCONV_ERRORS_HPP_
