#ifndef NONNEG_TESTS_ORACLES_HPP
#define NONNEG_TESTS_ORACLES_HPP

// Test-only oracles and random generators. Nothing here calls into the
// simplex or Jacobi code paths it is used to check.

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "nonneg/nonneg.hpp"

namespace nonneg::testing {

inline std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// p/q with |p| <= 9 and 1 <= q <= 9; zero with probability `zero_prob`.
inline Rational random_rational(std::mt19937_64& rng, double zero_prob = 0.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (zero_prob > 0.0 && u(rng) < zero_prob) return Rational(0);
  std::uniform_int_distribution<int> p(-9, 9), q(1, 9);
  Rational r(p(rng), q(rng));
  r.canonicalize();
  return r;
}

/// n x m matrix of random rationals. A third of the draws are sparse so
/// that subspaces touching the orthant boundary show up regularly.
inline Matrix<Rational> random_rational_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<int> style(0, 2);
  const double zero_prob = style(rng) == 0 ? 0.5 : 0.0;
  Matrix<Rational> a(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = random_rational(rng, zero_prob);
  return a;
}

template <Scalar T>
Matrix<T> to_backend(const Matrix<Rational>& a) {
  if constexpr (is_exact_v<T>) {
    return a;
  } else {
    return to_double_matrix(a);
  }
}

inline Matrix<double> random_uniform_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix<double> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

/// Whether x lies in the column space of A, by exact row reduction of
/// [A | x]. Checks EXACT results without going through Subspace::project.
inline bool in_column_space_exact(const Matrix<Rational>& a, const std::vector<Rational>& x) {
  const std::size_t n = a.rows(), m = a.cols();
  Matrix<Rational> aug(n, m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug(i, j) = a(i, j);
    aug(i, m) = x[i];
  }
  std::size_t row = 0;
  for (std::size_t j = 0; j < m && row < n; ++j) {
    std::size_t piv = row;
    while (piv < n && aug(piv, j) == 0) ++piv;
    if (piv == n) continue;
    for (std::size_t c = 0; c <= m; ++c) std::swap(aug(piv, c), aug(row, c));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || aug(i, j) == 0) continue;
      const Rational f = aug(i, j) / aug(row, j);
      for (std::size_t c = 0; c <= m; ++c) aug(i, c) -= f * aug(row, c);
    }
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (aug(i, m) != 0) return false;
  return true;
}

}  // namespace nonneg::testing

#endif  // NONNEG_TESTS_ORACLES_HPP
