// Library walkthrough: classify a subspace exactly, then analyze a
// symmetric matrix and a matrix with no nonnegative eigenvector.

#include <iostream>

#include "nonneg/nonneg.hpp"

using namespace nonneg;

template <Scalar T>
void print(const char* label, const Vector<T>& v) {
  std::cout << label << " [";
  for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << scalar_traits<T>::to_string(v[i]);
  std::cout << "]\n";
}

int main() {
  // span{(-1/2, 1, 1), (1, -1/2, 1)} in exact arithmetic.
  const Matrix<Rational> a = Matrix<Rational>::from_rows(
      {{Rational(-1, 2), Rational(1)}, {Rational(1), Rational(-1, 2)}, {Rational(1), Rational(1)}});
  const Subspace<Rational> v = orthonormalize(a);
  const AlternativeVerdict<Rational> verdict = decide_alternative(v);
  std::cout << "subspace verdict: " << verdict.name() << "\n";
  print("  witness:", verdict.witness().x);
  std::cout << "pair classification: " << classification_name(classify_pair(v)) << "\n";

  // A matrix with exactly two eigenvalues always has a nonnegative eigenvector.
  const SymmetricMatrix two = random_two_eigenvalue_matrix(5, -1.0, 2.0, 2, 42);
  const AnalysisReport r2 = analyze(two);
  std::cout << "two-eigenvalue matrix: " << r2.distinct_eigenvalue_count << " eigenvalues, nonnegative eigenvector "
            << (r2.has_nonneg_eigenvector ? "found" : "absent") << "\n";

  // With three eigenvalues this can fail.
  const SymmetricMatrix m = build_counterexample(4, {1.0, 2.0, 3.0});
  const AnalysisReport r3 = analyze(m);
  std::cout << "counterexample: " << r3.distinct_eigenvalue_count << " eigenvalues, nonnegative eigenvector "
            << (r3.has_nonneg_eigenvector ? "found" : "absent") << "\n";
  for (const auto& e : r3.per_eigenspace) {
    std::cout << "  lambda " << e.cluster.representative_value << " x" << e.cluster.multiplicity << ":";
    print(" positive vector orthogonal to the eigenspace", e.verdict.certificate().v);
  }
  return 0;
}
