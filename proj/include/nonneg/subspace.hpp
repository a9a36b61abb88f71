#ifndef NONNEG_SUBSPACE_HPP
#define NONNEG_SUBSPACE_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "nonneg/errors.hpp"
#include "nonneg/matrix.hpp"
#include "nonneg/scalar.hpp"

namespace nonneg {

inline constexpr double kDefaultRankTol = 1e-10;

/// A linear subspace V of R^n stored as an n x k basis matrix.
///
/// APPROX backends keep the basis orthonormal; EXACT backends keep it
/// orthogonal with primitive integer columns, since unit normalization would
/// leave the rationals. k == 0 is the zero subspace.
template <Scalar T>
class Subspace {
 public:
  /// The zero subspace of R^n.
  explicit Subspace(std::size_t ambient_dim) : basis_(ambient_dim, 0) {}

  /// Adopts `basis` after checking the orthogonality invariant:
  /// APPROX requires |B^T B - I| <= 1e-12 entrywise, EXACT requires B^T B
  /// diagonal with positive diagonal.
  static Subspace from_orthogonal_basis(Matrix<T> basis) {
    const std::size_t k = basis.cols();
    std::vector<T> gram(k);
    for (std::size_t a = 0; a < k; ++a) {
      const Vector<T> ca = basis.column(a);
      for (std::size_t b = a; b < k; ++b) {
        const Vector<T> cb = basis.column(b);
        const T g = dot<T>(ca, cb);
        if constexpr (is_exact_v<T>) {
          if (a != b && g != T(0)) throw UsageError("basis columns are not orthogonal");
          if (a == b && !(g > T(0))) throw UsageError("basis column is zero");
        } else {
          const double target = a == b ? 1.0 : 0.0;
          if (!(std::fabs(g - target) <= 1e-12)) throw UsageError("basis is not orthonormal");
        }
        if (a == b) gram[a] = g;
      }
    }
    return Subspace(std::move(basis), std::move(gram));
  }

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix<T>& basis() const { return basis_; }
  Vector<T> basis_vector(std::size_t j) const { return basis_.column(j); }
  /// <b_j, b_j>; one for APPROX up to rounding.
  const T& squared_norm(std::size_t j) const { return gram_[j]; }

 private:
  Subspace(Matrix<T> basis, std::vector<T> gram) : basis_(std::move(basis)), gram_(std::move(gram)) {}

  template <Scalar U>
  friend class SubspaceBuilder;

  Matrix<T> basis_;
  std::vector<T> gram_;
};

/// Incremental Gram-Schmidt accumulator shared by orthonormalize and
/// orthogonal_complement.
template <Scalar T>
class SubspaceBuilder {
 public:
  explicit SubspaceBuilder(std::size_t n) : n_(n) {}

  explicit SubspaceBuilder(const Subspace<T>& start) : n_(start.ambient_dim()) {
    for (std::size_t j = 0; j < start.dim(); ++j) {
      columns_.push_back(start.basis_vector(j));
      gram_.push_back(start.squared_norm(j));
    }
  }

  std::size_t size() const { return columns_.size(); }
  const Vector<T>& column(std::size_t j) const { return columns_[j]; }

  /// Residual of v after removing its components along accepted columns.
  /// APPROX performs two modified Gram-Schmidt passes.
  Vector<T> residual(Vector<T> v) const {
    const int passes = is_exact_v<T> ? 1 : 2;
    for (int pass = 0; pass < passes; ++pass) {
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        const T coef = T(dot<T>(columns_[j], v) / gram_[j]);
        for (std::size_t i = 0; i < n_; ++i) v[i] -= coef * columns_[j][i];
      }
    }
    return v;
  }

  /// Appends a nonzero residual, normalized (APPROX) or reduced to a
  /// primitive integer vector (EXACT).
  void accept(Vector<T> r) {
    if constexpr (is_exact_v<T>) {
      scalar_traits<T>::make_primitive(r);
    } else {
      const double norm = std::sqrt(dot<T>(r, r));
      for (auto& x : r) x /= norm;
    }
    gram_.push_back(dot<T>(r, r));
    columns_.push_back(std::move(r));
  }

  Subspace<T> build() && {
    return Subspace<T>(Matrix<T>::from_columns(n_, columns_), std::move(gram_));
  }

 private:
  std::size_t n_;
  std::vector<Vector<T>> columns_;
  std::vector<T> gram_;
};

/// Basis for the column space of `vectors` (n x m). A column is rejected
/// when its residual norm is <= rank_tol times the largest input column norm
/// (APPROX) or exactly zero (EXACT).
template <Scalar T>
Subspace<T> orthonormalize(const Matrix<T>& vectors, double rank_tol = kDefaultRankTol) {
  const std::size_t n = vectors.rows();
  if (n == 0) throw UsageError("ambient dimension must be at least 1");
  vectors.check_finite();
  SubspaceBuilder<T> builder(n);

  double largest = 0.0;
  if constexpr (!is_exact_v<T>) {
    for (std::size_t j = 0; j < vectors.cols(); ++j) {
      const Vector<T> c = vectors.column(j);
      largest = std::max(largest, std::sqrt(dot<T>(c, c)));
    }
  }

  for (std::size_t j = 0; j < vectors.cols() && builder.size() < n; ++j) {
    Vector<T> r = builder.residual(vectors.column(j));
    if constexpr (is_exact_v<T>) {
      if (max_abs<T>(r) == T(0)) continue;
    } else {
      if (!(std::sqrt(dot<T>(r, r)) > rank_tol * largest)) continue;
    }
    builder.accept(std::move(r));
  }
  return std::move(builder).build();
}

/// V-perp, of dimension n - dim(V). APPROX completes the basis greedily with
/// the coordinate vector of largest residual; EXACT takes coordinate vectors
/// in index order.
template <Scalar T>
Subspace<T> orthogonal_complement(const Subspace<T>& v) {
  const std::size_t n = v.ambient_dim();
  const std::size_t k = v.dim();
  SubspaceBuilder<T> builder(v);

  auto unit = [n](std::size_t i) {
    Vector<T> e(n, T(0));
    e[i] = T(1);
    return e;
  };

  if constexpr (is_exact_v<T>) {
    for (std::size_t i = 0; i < n && builder.size() < n; ++i) {
      Vector<T> r = builder.residual(unit(i));
      if (max_abs<T>(r) == T(0)) continue;
      builder.accept(std::move(r));
    }
  } else {
    std::vector<bool> used(n, false);
    while (builder.size() < n) {
      std::size_t best = n;
      double best_norm = -1.0;
      Vector<T> best_r;
      for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        Vector<T> r = builder.residual(unit(i));
        const double norm = std::sqrt(dot<T>(r, r));
        if (norm > best_norm) {
          best_norm = norm;
          best = i;
          best_r = std::move(r);
        }
      }
      if (best == n || !(best_norm > 0.0)) throw NumericalFailure("orthogonal complement lost rank");
      used[best] = true;
      builder.accept(std::move(best_r));
    }
  }
  if (builder.size() != n) throw NumericalFailure("orthogonal complement lost rank");

  std::vector<Vector<T>> added;
  for (std::size_t j = k; j < n; ++j) added.push_back(builder.column(j));
  return Subspace<T>::from_orthogonal_basis(Matrix<T>::from_columns(n, added));
}

/// Orthogonal projection of x onto V: sum_j <x,b_j>/<b_j,b_j> b_j.
template <Scalar T>
Vector<T> project(const Subspace<T>& v, std::span<const T> x) {
  const std::size_t n = v.ambient_dim();
  if (x.size() != n) throw UsageError("vector length differs from ambient dimension");
  Vector<T> out(n, T(0));
  for (std::size_t j = 0; j < v.dim(); ++j) {
    const Vector<T> b = v.basis_vector(j);
    const T coef = T(dot<T>(b, x) / v.squared_norm(j));
    for (std::size_t i = 0; i < n; ++i) out[i] += coef * b[i];
  }
  return out;
}

/// max_i |x_i - project(V, x)_i|
template <Scalar T>
T membership_residual(const Subspace<T>& v, std::span<const T> x) {
  const Vector<T> p = project(v, x);
  T m(0);
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max<T>(m, abs_value<T>(x[i] - p[i]));
  return m;
}

/// V itself for the full space R^n (identity basis).
template <Scalar T>
Subspace<T> whole_space(std::size_t n) {
  return Subspace<T>::from_orthogonal_basis(Matrix<T>::identity(n));
}

}  // namespace nonneg

#endif  // NONNEG_SUBSPACE_HPP
