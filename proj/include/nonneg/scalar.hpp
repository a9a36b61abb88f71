#ifndef NONNEG_SCALAR_HPP
#define NONNEG_SCALAR_HPP

#include <cmath>
#include <concepts>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace nonneg {

/// Backend description for a scalar type. Specialized for `double` (APPROX)
/// here and for `mpq_class` (EXACT) in rational.hpp.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr const char* backend_name = "float";

  static double abs(double x) { return std::fabs(x); }
  static double to_double(double x) { return x; }
  static double from_double(double x) { return x; }
  static bool finite(double x) { return std::isfinite(x); }

  /// Shortest text that parses back to the same binary64 value.
  static std::string to_string(double x) {
    char buf[32];
    for (int prec = 15; prec <= 17; ++prec) {
      std::snprintf(buf, sizeof buf, "%.*g", prec, x);
      if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
  }
};

template <class T>
concept Scalar = requires(const T& a, const T& b) {
  { scalar_traits<T>::exact } -> std::convertible_to<bool>;
  { scalar_traits<T>::abs(a) } -> std::convertible_to<T>;
  { scalar_traits<T>::to_double(a) } -> std::convertible_to<double>;
  { a < b } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
} && std::constructible_from<T, int>;

template <Scalar T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

template <Scalar T>
T abs_value(const T& x) {
  return scalar_traits<T>::abs(x);
}

template <Scalar T>
double to_double(const T& x) {
  return scalar_traits<T>::to_double(x);
}

/// |x| <= tol for APPROX, x == 0 for EXACT (tol ignored).
template <Scalar T>
bool negligible(const T& x, double tol) {
  if constexpr (is_exact_v<T>) {
    return x == T(0);
  } else {
    return scalar_traits<T>::abs(x) <= tol;
  }
}

/// x > tol for APPROX, x > 0 for EXACT.
template <Scalar T>
bool definitely_positive(const T& x, double tol) {
  if constexpr (is_exact_v<T>) {
    return x > T(0);
  } else {
    return x > tol;
  }
}

/// x < -tol for APPROX, x < 0 for EXACT.
template <Scalar T>
bool definitely_negative(const T& x, double tol) {
  if constexpr (is_exact_v<T>) {
    return x < T(0);
  } else {
    return x < -tol;
  }
}

}  // namespace nonneg

#endif  // NONNEG_SCALAR_HPP
