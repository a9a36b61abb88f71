#ifndef NONNEG_FEASIBILITY_HPP
#define NONNEG_FEASIBILITY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nonneg/errors.hpp"
#include "nonneg/matrix.hpp"
#include "nonneg/scalar.hpp"

namespace nonneg {

inline constexpr double kDefaultFeasTol = 1e-9;

/// Find x in R^d with A x = b, x >= 0.
template <Scalar T>
struct FeasibilityProblem {
  Matrix<T> a;
  Vector<T> b;

  FeasibilityProblem(Matrix<T> a_, Vector<T> b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.rows() < 1 || a.cols() < 1) throw UsageError("feasibility problem needs m >= 1 and d >= 1");
    if (b.size() != a.rows()) throw UsageError("right-hand side length differs from row count");
  }

  std::size_t rows() const { return a.rows(); }
  std::size_t vars() const { return a.cols(); }
};

template <Scalar T>
struct FeasibilityOutcome {
  std::optional<Vector<T>> x;  // engaged iff FEASIBLE

  bool feasible() const { return x.has_value(); }
  static FeasibilityOutcome infeasible() { return {}; }
};

struct SimplexOptions {
  double feas_tol = kDefaultFeasTol;  // relative to max(1, |b|_max), APPROX only
  double pivot_tol = 1e-11;           // relative to max(1, |A|_max), APPROX only
};

/// ||A x - b||_max
template <Scalar T>
T feasibility_residual(const FeasibilityProblem<T>& p, std::span<const T> x) {
  const Vector<T> ax = multiply(p.a, x);
  T r(0);
  for (std::size_t i = 0; i < ax.size(); ++i) r = std::max<T>(r, abs_value<T>(ax[i] - p.b[i]));
  return r;
}

/// Independent acceptance check for a claimed solution: the residual and
/// nonnegativity bounds of FeasibilityOutcome (exact equality in EXACT mode).
template <Scalar T>
bool satisfies_outcome_bounds(const FeasibilityProblem<T>& p, std::span<const T> x) {
  if (x.size() != p.vars()) return false;
  if constexpr (is_exact_v<T>) {
    for (const T& xi : x)
      if (xi < T(0)) return false;
    return feasibility_residual(p, x) == T(0);
  } else {
    for (double xi : x)
      if (!(xi >= -1e-12)) return false;
    const double scale = std::max(1.0, max_abs<double>(p.b));
    return feasibility_residual(p, x) <= 1e-9 * scale;
  }
}

/// Phase-1 simplex on [A | I] with artificial variables, Bland's rule for
/// both entering (lowest reduced-cost index) and leaving (lowest basic index
/// among minimum ratios) variables.
template <Scalar T>
FeasibilityOutcome<T> solve_feasibility(const FeasibilityProblem<T>& p, const SimplexOptions& opt = {}) {
  const std::size_t m = p.rows();
  const std::size_t d = p.vars();
  const std::size_t width = d + m;  // rhs kept separately

  double a_scale = 1.0, b_scale = 1.0;
  if constexpr (!is_exact_v<T>) {
    for (std::size_t i = 0; i < m; ++i) a_scale = std::max(a_scale, max_abs<double>(p.a.row(i)));
    b_scale = std::max(b_scale, max_abs<double>(p.b));
  }
  const double piv_tol = opt.pivot_tol * a_scale;
  const double rhs_tol = opt.pivot_tol * b_scale;

  Matrix<T> tab(m, width);
  Vector<T> rhs(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = p.b[i] < T(0);
    for (std::size_t j = 0; j < d; ++j) tab(i, j) = flip ? T(-p.a(i, j)) : p.a(i, j);
    tab(i, d + i) = T(1);
    rhs[i] = flip ? T(-p.b[i]) : p.b[i];
    basis[i] = d + i;
  }

  // Reduced costs of the phase-1 objective sum(artificials).
  Vector<T> cost(width, T(0));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < m; ++i) cost[j] -= tab(i, j);

  const std::size_t cap = 50 * (d + m);
  std::size_t iter = 0;
  for (;; ++iter) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (definitely_negative(cost[j], piv_tol)) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    if (iter >= cap)
      throw NumericalFailure("phase-1 simplex exceeded iteration cap of " + std::to_string(cap));

    std::size_t leave = m;
    T best_ratio(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (!definitely_positive(tab(i, enter), piv_tol)) continue;
      const T ratio = T(rhs[i] / tab(i, enter));
      bool take = false;
      if (leave == m) {
        take = true;
      } else if constexpr (is_exact_v<T>) {
        take = ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave]);
      } else {
        const double slack = 1e-12 * (1.0 + std::fabs(best_ratio));
        take = ratio < best_ratio - slack || (ratio <= best_ratio + slack && basis[i] < basis[leave]);
      }
      if (take) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw NumericalFailure("phase-1 simplex found an unbounded direction");

    const T pivot = tab(leave, enter);
    for (std::size_t j = 0; j < width; ++j) tab(leave, j) /= pivot;
    rhs[leave] /= pivot;
    tab(leave, enter) = T(1);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const T f = tab(i, enter);
      if (f == T(0)) continue;
      for (std::size_t j = 0; j < width; ++j) tab(i, j) -= f * tab(leave, j);
      tab(i, enter) = T(0);
      rhs[i] -= f * rhs[leave];
      if constexpr (!is_exact_v<T>) {
        if (rhs[i] < 0.0 && rhs[i] >= -rhs_tol) rhs[i] = 0.0;
      }
    }
    const T fc = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= fc * tab(leave, j);
    cost[enter] = T(0);
    basis[leave] = enter;
  }

  T artificial_mass(0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= d) artificial_mass += rhs[i];

  if constexpr (is_exact_v<T>) {
    if (artificial_mass != T(0)) return FeasibilityOutcome<T>::infeasible();
  } else {
    if (!(artificial_mass <= opt.feas_tol * b_scale)) return FeasibilityOutcome<T>::infeasible();
  }

  Vector<T> x(d, T(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < d) x[basis[i]] = rhs[i];
  if constexpr (!is_exact_v<T>) {
    for (double& xi : x)
      if (xi < 0.0 && xi >= -rhs_tol) xi = 0.0;
  }
  if (!satisfies_outcome_bounds<T>(p, x))
    throw NumericalFailure("phase-1 simplex solution violates residual bounds");
  return FeasibilityOutcome<T>{std::move(x)};
}

namespace detail {

/// Solves A[:, cols] y = b when those columns are linearly independent and
/// the system is consistent. Gauss-Jordan with partial pivoting.
template <Scalar T>
std::optional<Vector<T>> solve_column_subset(const FeasibilityProblem<T>& p, const std::vector<std::size_t>& cols,
                                             double tol) {
  const std::size_t m = p.rows();
  const std::size_t k = cols.size();
  Matrix<T> aug(m, k + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = p.a(i, cols[j]);
    aug(i, k) = p.b[i];
  }
  std::size_t row = 0;
  for (std::size_t j = 0; j < k; ++j, ++row) {
    std::size_t piv = m;
    T best(0);
    for (std::size_t i = row; i < m; ++i) {
      const T mag = abs_value(aug(i, j));
      if (!negligible(mag, tol) && (piv == m || mag > best)) {
        piv = i;
        best = mag;
      }
    }
    if (piv == m) return std::nullopt;  // dependent columns
    if (piv != row)
      for (std::size_t c = 0; c <= k; ++c) std::swap(aug(piv, c), aug(row, c));
    const T pv = aug(row, j);
    for (std::size_t c = 0; c <= k; ++c) aug(row, c) /= pv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row) continue;
      const T f = aug(i, j);
      if (f == T(0)) continue;
      for (std::size_t c = 0; c <= k; ++c) aug(i, c) -= f * aug(row, c);
    }
  }
  for (std::size_t i = k; i < m; ++i)
    if (!negligible(aug(i, k), tol)) return std::nullopt;  // inconsistent
  Vector<T> y(k);
  for (std::size_t j = 0; j < k; ++j) y[j] = aug(j, k);
  return y;
}

}  // namespace detail

/// Enumerates every column subset of size <= m and accepts the first
/// nonnegative basic solution. A feasible standard-form system always has a
/// basic feasible solution, so this decides feasibility. Requires d <= 12.
template <Scalar T>
FeasibilityOutcome<T> brute_force_feasibility(const FeasibilityProblem<T>& p, double tol = 1e-9) {
  const std::size_t m = p.rows();
  const std::size_t d = p.vars();
  if (d > 12) throw UsageError("brute_force_feasibility is limited to d <= 12 variables");

  for (std::size_t size = 0; size <= std::min(m, d); ++size) {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < d; ++j)
        if (mask & (1u << j)) cols.push_back(j);
      auto y = detail::solve_column_subset(p, cols, tol);
      if (!y) continue;
      bool nonneg = true;
      for (const T& v : *y)
        if (definitely_negative(v, tol)) nonneg = false;
      if (!nonneg) continue;
      Vector<T> x(d, T(0));
      for (std::size_t j = 0; j < cols.size(); ++j) x[cols[j]] = std::max<T>((*y)[j], T(0));
      return FeasibilityOutcome<T>{std::move(x)};
    }
  }
  return FeasibilityOutcome<T>::infeasible();
}

}  // namespace nonneg

#endif  // NONNEG_FEASIBILITY_HPP
