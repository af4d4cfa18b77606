#ifndef SYMCON_RATIONAL_HPP
#define SYMCON_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace symcon {

// mpq_class keeps gcd(num, den) = 1 and den > 0 after every arithmetic
// operation; values built from a raw numerator/denominator pair must go
// through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

/// Parses "a" or "a/b" with an optional leading sign; no whitespace, no decimals.
inline Rational parse_rational(std::string_view text) {
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  std::string num_str(num);
  if (!num_str.empty() && num_str.front() == '+') num_str.erase(0, 1);
  return make_rational(Integer(num_str), Integer(std::string(den)));
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

inline Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace symcon

#endif  // SYMCON_RATIONAL_HPP
