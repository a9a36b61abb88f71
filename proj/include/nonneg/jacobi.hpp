#ifndef NONNEG_JACOBI_HPP
#define NONNEG_JACOBI_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "nonneg/errors.hpp"
#include "nonneg/matrix.hpp"
#include "nonneg/subspace.hpp"

namespace nonneg {

inline constexpr double kDefaultSweepTol = 1e-14;
inline constexpr double kDefaultClusterTol = 1e-8;
inline constexpr int kMaxJacobiSweeps = 100;

/// Dense real symmetric matrix. Construction checks
/// |M_ij - M_ji| <= 1e-12 * max|M| and stores (M + M^T) / 2.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(const Matrix<double>& m) : entries_(m.rows(), m.cols()) {
    if (m.rows() != m.cols()) throw UsageError("matrix is not square");
    if (m.rows() == 0) throw UsageError("matrix dimension must be at least 1");
    m.check_finite();
    const std::size_t n = m.rows();
    const double scale = max_abs_entry(m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double gap = std::fabs(m(i, j) - m(j, i));
        if (gap > 1e-12 * scale)
          throw UsageError("matrix is not symmetric: |M(" + std::to_string(i) + "," + std::to_string(j) +
                           ") - M(" + std::to_string(j) + "," + std::to_string(i) + ")| = " +
                           scalar_traits<double>::to_string(gap));
        entries_(i, j) = 0.5 * (m(i, j) + m(j, i));
      }
  }

  std::size_t dim() const { return entries_.rows(); }
  const Matrix<double>& entries() const { return entries_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  static double max_abs_entry(const Matrix<double>& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s = std::max(s, max_abs<double>(m.row(i)));
    return s;
  }

  Matrix<double> entries_;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  Matrix<double> rotation;          // column j pairs with eigenvalues[j]
  int sweeps = 0;
};

/// Cyclic-by-row Jacobi. Stops once the off-diagonal Frobenius mass is
/// <= sweep_tol * ||M||_F; throws NumericalFailure after 100 sweeps.
inline EigenDecomposition jacobi_eigendecomposition(const SymmetricMatrix& m,
                                                    double sweep_tol = kDefaultSweepTol) {
  const std::size_t n = m.dim();
  Matrix<double> a = m.entries();
  Matrix<double> v = Matrix<double>::identity(n);

  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) frob += a(i, j) * a(i, j);
  frob = std::sqrt(frob);

  auto off_mass = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  for (;; ++sweep) {
    if (off_mass() <= sweep_tol * frob) break;
    if (sweep == kMaxJacobiSweeps)
      throw NumericalFailure("Jacobi iteration did not converge in " + std::to_string(kMaxJacobiSweeps) +
                             " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::fabs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(p, r) = a(r, p);
          a(r, q) = c * arq + s * arp;
          a(q, r) = a(r, q);
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.rotation = Matrix<double>(n, n);
  out.sweeps = sweep;
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) out.rotation(i, j) = v(i, order[j]);
  }
  return out;
}

/// Half-open index range [begin, end) into a sorted eigenvalue list.
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  bool operator==(const IndexRange&) const = default;
};

/// Greedy gap clustering: a new cluster starts where the gap to the previous
/// value exceeds cluster_tol * max(1, max|value|).
inline std::vector<IndexRange> cluster_eigenvalues(const std::vector<double>& values,
                                                   double cluster_tol = kDefaultClusterTol) {
  std::vector<IndexRange> out;
  if (values.empty()) return out;
  double scale = 1.0;
  for (double x : values) scale = std::max(scale, std::fabs(x));
  const double threshold = cluster_tol * scale;

  std::size_t start = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) throw UsageError("eigenvalues must be sorted ascending");
    if (values[i] - values[i - 1] > threshold) {
      out.push_back({start, i});
      start = i;
    }
  }
  out.push_back({start, values.size()});
  return out;
}

struct EigenspaceCluster {
  double representative_value = 0.0;  // mean of the clustered eigenvalues
  std::size_t multiplicity = 0;
  Subspace<double> space{1};
};

inline std::vector<EigenspaceCluster> eigenspaces(const EigenDecomposition& eig,
                                                  double cluster_tol = kDefaultClusterTol,
                                                  double rank_tol = kDefaultRankTol) {
  const std::size_t n = eig.eigenvalues.size();
  std::vector<EigenspaceCluster> out;
  for (const IndexRange& r : cluster_eigenvalues(eig.eigenvalues, cluster_tol)) {
    Matrix<double> cols(n, r.size());
    double mean = 0.0;
    for (std::size_t j = r.begin; j < r.end; ++j) {
      mean += eig.eigenvalues[j];
      for (std::size_t i = 0; i < n; ++i) cols(i, j - r.begin) = eig.rotation(i, j);
    }
    EigenspaceCluster c;
    c.representative_value = mean / static_cast<double>(r.size());
    c.multiplicity = r.size();
    c.space = orthonormalize(cols, rank_tol);
    if (c.space.dim() != r.size()) throw NumericalFailure("eigenvector columns lost rank during clustering");
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<EigenspaceCluster> eigenspaces(const SymmetricMatrix& m, double cluster_tol = kDefaultClusterTol,
                                                  double sweep_tol = kDefaultSweepTol) {
  return eigenspaces(jacobi_eigendecomposition(m, sweep_tol), cluster_tol);
}

}  // namespace nonneg

#endif  // NONNEG_JACOBI_HPP
