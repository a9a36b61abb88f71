#ifndef NONNEG_ALTERNATIVE_HPP
#define NONNEG_ALTERNATIVE_HPP

// Decides, for a subspace V of R^n, which side of the alternative holds:
//
//   V contains a nonzero nonnegative vector        (witness x in V, sum x = 1)
//   V-perp contains a strictly positive vector     (certificate v, min v = 1)
//
// Exactly one holds. A certificate rules out any witness because a nonzero
// nonnegative x has <x, v> >= min(v) * sum(x) > 0, contradicting x in V.

#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nonneg/errors.hpp"
#include "nonneg/feasibility.hpp"
#include "nonneg/matrix.hpp"
#include "nonneg/subspace.hpp"

namespace nonneg {

inline constexpr double kDefaultVerifyTol = 1e-9;

struct AlternativeOptions {
  double rank_tol = kDefaultRankTol;
  SimplexOptions simplex{};
  double verify_tol = kDefaultVerifyTol;
};

template <Scalar T>
struct WitnessVector {
  Vector<T> x;
  T subspace_residual;  // ||x - project(V, x)||_max
  T min_component;
};

template <Scalar T>
struct CertificateVector {
  Vector<T> v;
  T orthogonality_residual;  // max_j |<v, b_j>|
};

/// Sum to 1 (+-tol), min >= -tol, and ||x - project(V,x)||_max <= tol.
/// EXACT backends ignore tol and demand exact equalities.
template <Scalar T>
bool verify_witness(const Subspace<T>& v, std::span<const T> x, double tol = kDefaultVerifyTol) {
  if (x.size() != v.ambient_dim() || x.empty()) return false;
  for (const T& xi : x)
    if (!scalar_traits<T>::finite(xi)) return false;
  if (!negligible<T>(T(sum<T>(x) - T(1)), tol)) return false;
  for (const T& xi : x)
    if (definitely_negative(xi, tol)) return false;
  return negligible<T>(membership_residual(v, x), tol);
}

/// min v >= 1 - tol and |<v, b>| <= tol for every basis column b of V.
/// Passing proves V holds no nonzero nonnegative vector.
template <Scalar T>
bool verify_certificate(const Subspace<T>& v, std::span<const T> c, double tol = kDefaultVerifyTol) {
  if (c.size() != v.ambient_dim() || c.empty()) return false;
  for (const T& ci : c)
    if (!scalar_traits<T>::finite(ci)) return false;
  for (const T& ci : c)
    if (definitely_negative<T>(T(ci - T(1)), tol)) return false;
  for (std::size_t j = 0; j < v.dim(); ++j)
    if (!negligible<T>(dot<T>(c, v.basis_vector(j)), tol)) return false;
  return true;
}

namespace detail {

template <Scalar T>
WitnessVector<T> make_witness(const Subspace<T>& v, Vector<T> x) {
  const T res = membership_residual<T>(v, x);
  const T mn = min_element_value<T>(x);
  return {std::move(x), res, mn};
}

template <Scalar T>
CertificateVector<T> make_certificate(const Subspace<T>& v, Vector<T> c) {
  T res(0);
  for (std::size_t j = 0; j < v.dim(); ++j) res = std::max<T>(res, abs_value<T>(dot<T>(c, v.basis_vector(j))));
  return {std::move(c), res};
}

template <Scalar T>
std::string describe(const Subspace<T>& v) {
  std::ostringstream os;
  os << "subspace of R^" << v.ambient_dim() << " with basis columns";
  for (std::size_t j = 0; j < v.dim(); ++j) {
    os << " (";
    const Vector<T> b = v.basis_vector(j);
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << scalar_traits<T>::to_string(b[i]);
    os << ")";
  }
  return os.str();
}

}  // namespace detail

/// Standard-form system whose solutions are exactly V intersected with the
/// simplex: (I - P_V) x = 0, 1^T x = 1, x >= 0, with the projector rows rank
/// filtered down to n - k independent constraints. Requires 0 < k < n.
template <Scalar T>
FeasibilityProblem<T> witness_problem(const Subspace<T>& v, double rank_tol = kDefaultRankTol) {
  const std::size_t n = v.ambient_dim();
  const std::size_t k = v.dim();
  if (k == 0 || k == n) throw UsageError("witness_problem needs a proper nonzero subspace");
  Matrix<T> residual_map(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector<T> e(n, T(0));
    e[i] = T(1);
    const Vector<T> p = project<T>(v, e);
    for (std::size_t r = 0; r < n; ++r) residual_map(r, i) = T(e[r] - p[r]);
  }
  // I - P_V is symmetric, so its column space is its row space.
  const Subspace<T> rows = orthonormalize(residual_map, rank_tol);
  if (rows.dim() != n - k) throw NumericalFailure("projector rank filter kept the wrong number of rows");

  Matrix<T> a(n - k + 1, n);
  Vector<T> b(n - k + 1, T(0));
  for (std::size_t r = 0; r < n - k; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = rows.basis()(c, r);
  for (std::size_t c = 0; c < n; ++c) a(n - k, c) = T(1);
  b[n - k] = T(1);

  return FeasibilityProblem<T>(std::move(a), std::move(b));
}

/// B^T y = -B^T 1, y >= 0: solvable iff V-perp holds a positive vector
/// (v = y + 1). Requires k < n.
template <Scalar T>
FeasibilityProblem<T> certificate_problem(const Subspace<T>& v) {
  const std::size_t n = v.ambient_dim();
  const std::size_t k = v.dim();
  if (k == 0 || k == n) throw UsageError("certificate_problem needs a proper nonzero subspace");
  Matrix<T> a(k, n);
  Vector<T> b(k, T(0));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      a(r, c) = v.basis()(c, r);
      b[r] -= a(r, c);
    }

  return FeasibilityProblem<T>(std::move(a), std::move(b));
}

/// Nonzero nonnegative x in V normalized onto the simplex, or nullopt.
template <Scalar T>
std::optional<WitnessVector<T>> find_nonneg_witness(const Subspace<T>& v, const AlternativeOptions& opt = {}) {
  const std::size_t n = v.ambient_dim();
  const std::size_t k = v.dim();
  if (k == 0) return std::nullopt;
  if (k == n) {
    Vector<T> e1(n, T(0));
    e1[0] = T(1);
    return detail::make_witness(v, std::move(e1));
  }

  const FeasibilityOutcome<T> out = solve_feasibility(witness_problem(v, opt.rank_tol), opt.simplex);
  if (!out.feasible()) return std::nullopt;
  WitnessVector<T> w = detail::make_witness(v, *out.x);
  if (!verify_witness<T>(v, w.x, opt.verify_tol))
    throw NumericalFailure("witness produced by the solver fails verification for " + detail::describe(v));
  return w;
}

/// Strictly positive v in V-perp scaled so min v = 1, or nullopt.
///
/// The substitution v = y + 1 turns the open condition v > 0 into y >= 0;
/// V-perp is closed under positive scaling, so nothing is lost.
template <Scalar T>
std::optional<CertificateVector<T>> find_positive_certificate(const Subspace<T>& v,
                                                              const AlternativeOptions& opt = {}) {
  const std::size_t n = v.ambient_dim();
  const std::size_t k = v.dim();
  if (k == 0) return detail::make_certificate(v, Vector<T>(n, T(1)));
  if (k == n) return std::nullopt;

  const FeasibilityOutcome<T> out = solve_feasibility(certificate_problem(v), opt.simplex);
  if (!out.feasible()) return std::nullopt;

  Vector<T> c = *out.x;
  for (T& ci : c) ci += T(1);
  const T mn = min_element_value<T>(c);
  for (T& ci : c) ci /= mn;
  CertificateVector<T> cert = detail::make_certificate(v, std::move(c));
  if (!verify_certificate<T>(v, cert.v, opt.verify_tol))
    throw NumericalFailure("certificate produced by the solver fails verification for " + detail::describe(v));
  return cert;
}

/// HAS_NONNEG(witness) or NO_NONNEG(certificate); exactly one is held.
template <Scalar T>
class AlternativeVerdict {
 public:
  explicit AlternativeVerdict(WitnessVector<T> w) : value_(std::move(w)) {}
  explicit AlternativeVerdict(CertificateVector<T> c) : value_(std::move(c)) {}

  bool has_nonneg() const { return std::holds_alternative<WitnessVector<T>>(value_); }
  const WitnessVector<T>& witness() const { return std::get<WitnessVector<T>>(value_); }
  const CertificateVector<T>& certificate() const { return std::get<CertificateVector<T>>(value_); }
  /// The witness or certificate vector, whichever is held.
  const Vector<T>& vector() const { return has_nonneg() ? witness().x : certificate().v; }
  const char* name() const { return has_nonneg() ? "HAS_NONNEG" : "NO_NONNEG"; }

 private:
  std::variant<WitnessVector<T>, CertificateVector<T>> value_;
};

template <Scalar T>
AlternativeVerdict<T> decide_alternative(const Subspace<T>& v, const AlternativeOptions& opt = {}) {
  if (auto w = find_nonneg_witness(v, opt)) return AlternativeVerdict<T>(std::move(*w));
  if (auto c = find_positive_certificate(v, opt)) return AlternativeVerdict<T>(std::move(*c));
  throw PropositionViolation("neither a nonnegative witness nor a positive certificate was found for " +
                             detail::describe(v));
}

/// Both V and V-perp contain nonzero nonnegative vectors.
template <Scalar T>
struct BothSides {
  WitnessVector<T> witness_v;
  WitnessVector<T> witness_complement;
};

/// Only V does; certificate_in_v is a positive vector of V ruling out V-perp.
template <Scalar T>
struct OnlyV {
  WitnessVector<T> witness_v;
  CertificateVector<T> certificate_in_v;
};

/// Only V-perp does; certificate_in_complement rules out V.
template <Scalar T>
struct OnlyComplement {
  CertificateVector<T> certificate_in_complement;
  WitnessVector<T> witness_complement;
};

// The fourth combination contradicts the alternative and has no representation.
template <Scalar T>
using PairClassification = std::variant<BothSides<T>, OnlyV<T>, OnlyComplement<T>>;

template <Scalar T>
const char* classification_name(const PairClassification<T>& c) {
  switch (c.index()) {
    case 0: return "BOTH_SIDES";
    case 1: return "ONLY_V";
    default: return "ONLY_COMPLEMENT";
  }
}

template <Scalar T>
PairClassification<T> classify_pair(const Subspace<T>& v, const AlternativeOptions& opt = {}) {
  const Subspace<T> perp = orthogonal_complement(v);
  const AlternativeVerdict<T> dv = decide_alternative(v, opt);
  const AlternativeVerdict<T> dp = decide_alternative(perp, opt);
  if (dv.has_nonneg() && dp.has_nonneg()) return BothSides<T>{dv.witness(), dp.witness()};
  if (dv.has_nonneg()) return OnlyV<T>{dv.witness(), dp.certificate()};
  if (dp.has_nonneg()) return OnlyComplement<T>{dv.certificate(), dp.witness()};
  throw PropositionViolation("neither V nor its complement contains a nonzero nonnegative vector: " +
                             detail::describe(v));
}

}  // namespace nonneg

#endif  // NONNEG_ALTERNATIVE_HPP
