#ifndef QMVAL_ERRORS_HPP
#define QMVAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmval {

// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-contract input (CLI exit code 1).
class invalid_input : public error {
 public:
  explicit invalid_input(const std::string& what) : error(what) {}
};

// Syntax error in a polynomial expression; keeps the 0-based offset.
class parse_error : public invalid_input {
 public:
  parse_error(const std::string& what, std::size_t position)
      : invalid_input(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A self-check that can only fail through an implementation bug
// (CLI exit code 2). Never a valid outcome.
class internal_error : public error {
 public:
  explicit internal_error(const std::string& what) : error(what) {}
};

}  // namespace qmval

#endif
