#ifndef NONNEG_SPECTRAL_HPP
#define NONNEG_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nonneg/alternative.hpp"
#include "nonneg/errors.hpp"
#include "nonneg/jacobi.hpp"
#include "nonneg/matrix.hpp"
#include "nonneg/subspace.hpp"

namespace nonneg {

inline constexpr double kEigenResidualTol = 1e-6;
inline constexpr double kMinEigenvalueGap = 1e-6;

struct AnalysisOptions {
  double cluster_tol = kDefaultClusterTol;
  double sweep_tol = kDefaultSweepTol;
  AlternativeOptions alternative{};
};

struct EigenspaceVerdict {
  EigenspaceCluster cluster;
  AlternativeVerdict<double> verdict;
  /// ||M x - lambda x||_max for a HAS_NONNEG witness x, else 0.
  double eigen_residual = 0.0;
};

struct AnalysisReport {
  std::size_t matrix_dim = 0;
  std::size_t distinct_eigenvalue_count = 0;
  std::vector<EigenspaceVerdict> per_eigenspace;
  bool has_nonneg_eigenvector = false;
  bool theorem_applicable = false;  // at most two distinct eigenvalues
  bool theorem_satisfied = false;   // vacuously true when not applicable
};

/// ||M x - lambda x||_max
inline double eigen_residual(const SymmetricMatrix& m, std::span<const double> x, double lambda) {
  const Vector<double> mx = multiply<double>(m.entries(), x);
  double r = 0.0;
  for (std::size_t i = 0; i < mx.size(); ++i) r = std::max(r, std::fabs(mx[i] - lambda * x[i]));
  return r;
}

namespace detail {

inline std::string dump(const SymmetricMatrix& m, const std::vector<EigenspaceCluster>& clusters) {
  std::ostringstream os;
  os << "matrix (" << m.dim() << "x" << m.dim() << "):";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << "\n  [";
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? " " : "") << scalar_traits<double>::to_string(m(i, j));
    os << "]";
  }
  os << "\neigenvalue clusters:";
  for (const auto& c : clusters)
    os << "\n  " << scalar_traits<double>::to_string(c.representative_value) << " x" << c.multiplicity;
  return os.str();
}

}  // namespace detail

/// Runs the alternative on every eigenspace of M. With at most two distinct
/// eigenvalues a nonnegative eigenvector must exist; failing to find one
/// raises NumericalFailure rather than being reported.
inline AnalysisReport analyze(const SymmetricMatrix& m, const AnalysisOptions& opt = {}) {
  const std::vector<EigenspaceCluster> clusters =
      eigenspaces(jacobi_eigendecomposition(m, opt.sweep_tol), opt.cluster_tol, opt.alternative.rank_tol);

  AnalysisReport report;
  report.matrix_dim = m.dim();
  report.distinct_eigenvalue_count = clusters.size();
  for (const EigenspaceCluster& c : clusters) {
    AlternativeVerdict<double> verdict = decide_alternative(c.space, opt.alternative);
    double res = 0.0;
    if (verdict.has_nonneg()) {
      res = eigen_residual(m, verdict.witness().x, c.representative_value);
      if (res > kEigenResidualTol * std::max(1.0, std::fabs(c.representative_value)))
        throw NumericalFailure("witness eigen-residual " + scalar_traits<double>::to_string(res) +
                               " exceeds bound\n" + detail::dump(m, clusters));
      report.has_nonneg_eigenvector = true;
    }
    report.per_eigenspace.push_back({c, std::move(verdict), res});
  }
  report.theorem_applicable = report.distinct_eigenvalue_count <= 2;
  if (report.theorem_applicable && !report.has_nonneg_eigenvector)
    throw NumericalFailure("no nonnegative eigenvector found for a matrix with at most two eigenvalues\n" +
                           detail::dump(m, clusters));
  report.theorem_satisfied = !report.theorem_applicable || report.has_nonneg_eigenvector;
  return report;
}

/// The pair v = (-1/2, 1, ..., 1), w = (1, -1/2, 1, 0, ..., 0): orthogonal,
/// neither nonnegative, with v + w strictly positive.
template <Scalar T>
std::pair<Vector<T>, Vector<T>> counterexample_vectors(std::size_t n) {
  if (n < 3) throw UsageError("counterexample construction requires dimension n >= 3");
  const T half = T(T(1) / T(2));
  Vector<T> v(n, T(1)), w(n, T(0));
  v[0] = T(-half);
  w[0] = T(1);
  w[1] = T(-half);
  w[2] = T(1);
  return {std::move(v), std::move(w)};
}

/// Expands (lambda_v, lambda_w, rest...) to n eigenvalues, repeating the
/// last rest value to fill. Validates separation of lambda_v and lambda_w
/// from each other and from every rest value.
inline std::vector<double> expand_counterexample_spectrum(std::size_t n, const std::vector<double>& eigenvalues) {
  if (n < 3) throw UsageError("counterexample construction requires dimension n >= 3");
  if (eigenvalues.size() < 3)
    throw UsageError("counterexample needs at least three eigenvalues (lambda_v, lambda_w, rest...)");
  if (eigenvalues.size() > n)
    throw UsageError("more eigenvalues (" + std::to_string(eigenvalues.size()) + ") than dimension n = " +
                     std::to_string(n));
  for (double x : eigenvalues)
    if (!std::isfinite(x)) throw UsageError("eigenvalues must be finite");

  std::vector<double> full = eigenvalues;
  while (full.size() < n) full.push_back(eigenvalues.back());

  auto separated = [](double a, double b) { return std::fabs(a - b) >= kMinEigenvalueGap; };
  if (!separated(full[0], full[1])) throw UsageError("lambda_v and lambda_w must differ by at least 1e-6");
  for (std::size_t i = 2; i < n; ++i)
    if (!separated(full[0], full[i]) || !separated(full[1], full[i]))
      throw UsageError("rest eigenvalues must differ from lambda_v and lambda_w by at least 1e-6");
  return full;
}

inline SymmetricMatrix spectral_matrix(const Matrix<double>& q, const std::vector<double>& lambda) {
  const std::size_t n = q.rows();
  Matrix<double> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < lambda.size(); ++c) s += lambda[c] * q(i, c) * q(j, c);
      m(i, j) = s;
      m(j, i) = s;
    }
  return SymmetricMatrix(m);
}

/// Symmetric matrix with v and w as eigenvectors of simple eigenvalues
/// lambda_v and lambda_w; the remaining eigenvectors complete {v, w} by
/// Gram-Schmidt against e_1, e_2, ... in order. It has no nonnegative
/// eigenvector.
inline SymmetricMatrix build_counterexample(std::size_t n, const std::vector<double>& eigenvalues) {
  const std::vector<double> lambda = expand_counterexample_spectrum(n, eigenvalues);
  const auto [v, w] = counterexample_vectors<double>(n);

  if (dot<double>(v, w) != 0.0) throw NumericalFailure("construction vectors are not orthogonal");
  for (std::size_t i = 0; i < n; ++i)
    if (!(v[i] + w[i] > 0.0)) throw NumericalFailure("v + w is not strictly positive");

  std::vector<Vector<double>> candidates{v, w};
  for (std::size_t i = 0; i < n; ++i) {
    Vector<double> e(n, 0.0);
    e[i] = 1.0;
    candidates.push_back(std::move(e));
  }
  const Subspace<double> basis = orthonormalize(Matrix<double>::from_columns(n, candidates));
  if (basis.dim() != n) throw NumericalFailure("basis completion lost rank");
  return spectral_matrix(basis.basis(), lambda);
}

struct NoNonnegCheck {
  bool no_nonneg_eigenvector = true;
  std::vector<std::string> diagnostics;  // one line per eigenspace
};

/// Independent of analyze for simple eigenvalues: span{u} holds a nonzero
/// nonnegative vector iff u or -u is nonnegative (sign scan with tolerance
/// sign_tol). Larger eigenspaces go through decide_alternative.
inline NoNonnegCheck verify_no_nonneg_eigenvector(const SymmetricMatrix& m, const AnalysisOptions& opt = {},
                                                  double sign_tol = 1e-9) {
  NoNonnegCheck out;
  for (const EigenspaceCluster& c :
       eigenspaces(jacobi_eigendecomposition(m, opt.sweep_tol), opt.cluster_tol, opt.alternative.rank_tol)) {
    std::ostringstream line;
    line << "lambda=" << scalar_traits<double>::to_string(c.representative_value) << " mult=" << c.multiplicity
         << ": ";
    bool found = false;
    if (c.space.dim() == 1) {
      const Vector<double> u = c.space.basis_vector(0);
      const bool nonneg = std::all_of(u.begin(), u.end(), [&](double x) { return x >= -sign_tol; });
      const bool nonpos = std::all_of(u.begin(), u.end(), [&](double x) { return x <= sign_tol; });
      found = nonneg || nonpos;
      line << (found ? "eigenvector has a single sign" : "eigenvector has mixed signs");
    } else {
      const AlternativeVerdict<double> verdict = decide_alternative(c.space, opt.alternative);
      found = verdict.has_nonneg();
      line << (found ? "eigenspace holds a nonnegative vector" : "positive certificate orthogonal to eigenspace");
    }
    if (found) out.no_nonneg_eigenvector = false;
    out.diagnostics.push_back(line.str());
  }
  return out;
}

/// Orthonormalization of a seeded Gaussian matrix. Deterministic per seed on
/// a given standard library.
inline Matrix<double> random_orthogonal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    Matrix<double> g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = gauss(rng);
    Subspace<double> q = orthonormalize(g, 1e-8);
    if (q.dim() == n) return q.basis();
  }
}

/// Q diag(lambda1 (k times), lambda2 (n - k times)) Q^T for a seeded random
/// orthogonal Q.
inline SymmetricMatrix random_two_eigenvalue_matrix(std::size_t n, double lambda1, double lambda2,
                                                    std::size_t multiplicity, std::uint64_t seed) {
  if (n < 2 || multiplicity < 1 || multiplicity > n - 1)
    throw UsageError("multiplicity of lambda1 must satisfy 1 <= k <= n - 1");
  if (!std::isfinite(lambda1) || !std::isfinite(lambda2) || std::fabs(lambda1 - lambda2) < kMinEigenvalueGap)
    throw UsageError("the two eigenvalues must be finite and differ by at least 1e-6");
  std::vector<double> lambda(n, lambda2);
  std::fill(lambda.begin(), lambda.begin() + static_cast<std::ptrdiff_t>(multiplicity), lambda1);
  return spectral_matrix(random_orthogonal(n, seed), lambda);
}

}  // namespace nonneg

#endif  // NONNEG_SPECTRAL_HPP
