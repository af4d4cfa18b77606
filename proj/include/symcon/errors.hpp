#ifndef SYMCON_ERRORS_HPP
#define SYMCON_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symcon {

/// Operands live in different polynomial rings (or have a different number of variables).
class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("operands belong to different rings") {}
  explicit RingMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Polynomial operands are sorted by different monomial orders.
class OrderMismatch : public std::invalid_argument {
 public:
  OrderMismatch() : std::invalid_argument("operands use different monomial orders") {}
};

/// The quotient ring is not finite dimensional, so no colength exists.
class NotZeroDimensional : public std::domain_error {
 public:
  explicit NotZeroDimensional(const std::string& what) : std::domain_error(what) {}
};

/// Syntax or binding error in a session script; carries a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                           message),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace symcon

#endif  // SYMCON_ERRORS_HPP
