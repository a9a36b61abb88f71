#ifndef NONNEG_RATIONAL_HPP
#define NONNEG_RATIONAL_HPP

// EXACT backend: arbitrary-precision rationals from GMP.

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "nonneg/errors.hpp"
#include "nonneg/scalar.hpp"

namespace nonneg {

using Rational = mpq_class;

template <>
struct scalar_traits<mpq_class> {
  static constexpr bool exact = true;
  static constexpr const char* backend_name = "exact";

  static mpq_class abs(const mpq_class& x) { return ::abs(x); }
  static double to_double(const mpq_class& x) { return x.get_d(); }
  // Every finite binary64 value is a rational; conversion is exact.
  static mpq_class from_double(double x) { return mpq_class(x); }
  static bool finite(const mpq_class&) { return true; }
  static std::string to_string(const mpq_class& x) { return x.get_str(); }

  /// Rescales a nonzero vector to the primitive integer vector with the same
  /// direction (positive multiplier).
  static void make_primitive(std::vector<mpq_class>& r) {
    mpz_class lcm = 1;
    for (const auto& x : r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    mpz_class g = 0;
    for (auto& x : r) {
      x *= lcm;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (g != 0)
      for (auto& x : r) x /= g;
  }
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw ParseError("invalid number literal '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

inline mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace detail

/// Parses `p/q`, integers, and decimals with optional exponent
/// (`-0.125`, `3e-2`) into an exact rational.
inline mpq_class parse_rational(std::string_view text) {
  const std::string_view whole = text;
  if (text.empty()) throw ParseError("empty number literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = detail::parse_integer(text.substr(0, slash), whole);
    mpz_class den = detail::parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mpz_class ez = detail::parse_integer(text.substr(e + 1), whole);
    if (!ez.fits_slong_p() || abs(ez) > 4000)
      throw ParseError("exponent out of range in '" + std::string(whole) + "'");
    exponent = ez.get_si();
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot), fp = text.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !detail::all_digits(ip)) ||
        (!fp.empty() && !detail::all_digits(fp)))
      throw ParseError("invalid number literal '" + std::string(whole) + "'");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!detail::all_digits(text))
      throw ParseError("invalid number literal '" + std::string(whole) + "'");
    digits = std::string(text);
  }

  mpq_class q(mpz_class(digits, 10));
  if (exponent > 0) q *= detail::pow10(static_cast<unsigned long>(exponent));
  if (exponent < 0) q /= detail::pow10(static_cast<unsigned long>(-exponent));
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace nonneg

#endif  // NONNEG_RATIONAL_HPP
