#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nonneg/nonneg.hpp"
#include "oracles.hpp"

namespace nonneg {
namespace {

bool has_single_sign(const Vector<double>& u, double tol) {
  return std::all_of(u.begin(), u.end(), [&](double x) { return x >= -tol; }) ||
         std::all_of(u.begin(), u.end(), [&](double x) { return x <= tol; });
}

TEST(Analyze, SwapMatrix) {
  const auto r = analyze(SymmetricMatrix(Matrix<double>::from_rows({{0.0, 1.0}, {1.0, 0.0}})));
  EXPECT_EQ(r.matrix_dim, 2u);
  ASSERT_EQ(r.distinct_eigenvalue_count, 2u);
  EXPECT_FALSE(r.per_eigenspace[0].verdict.has_nonneg());
  ASSERT_TRUE(r.per_eigenspace[1].verdict.has_nonneg());
  const auto& x = r.per_eigenspace[1].verdict.witness().x;
  EXPECT_NEAR(x[0], 0.5, 1e-12);
  EXPECT_NEAR(x[1], 0.5, 1e-12);
  EXPECT_TRUE(r.has_nonneg_eigenvector);
  EXPECT_TRUE(r.theorem_applicable);
  EXPECT_TRUE(r.theorem_satisfied);
}

TEST(Analyze, IdentityIsOneClusterWithWitness) {
  const auto r = analyze(SymmetricMatrix(Matrix<double>::identity(3)));
  ASSERT_EQ(r.distinct_eigenvalue_count, 1u);
  ASSERT_TRUE(r.per_eigenspace[0].verdict.has_nonneg());
  EXPECT_EQ(r.per_eigenspace[0].verdict.witness().x, (Vector<double>{1.0, 0.0, 0.0}));
  EXPECT_TRUE(r.theorem_satisfied);
}

TEST(Analyze, CounterexampleHasNoNonnegativeEigenvector) {
  const auto r = analyze(build_counterexample(3, {1.0, 2.0, 3.0}));
  ASSERT_EQ(r.distinct_eigenvalue_count, 3u);
  for (const auto& e : r.per_eigenspace) {
    ASSERT_FALSE(e.verdict.has_nonneg());
    EXPECT_TRUE(verify_certificate<double>(e.cluster.space, e.verdict.certificate().v));
  }
  EXPECT_FALSE(r.has_nonneg_eigenvector);
  EXPECT_FALSE(r.theorem_applicable);
  EXPECT_TRUE(r.theorem_satisfied);
}

TEST(CounterexampleVectors, ExactIdentities) {
  const Rational h(1, 2);
  {
    const auto [v, w] = counterexample_vectors<Rational>(3);
    EXPECT_EQ(v, (Vector<Rational>{-h, 1, 1}));
    EXPECT_EQ(w, (Vector<Rational>{1, -h, 1}));
    EXPECT_EQ(dot<Rational>(v, w), 0);
    Vector<Rational> s(3);
    for (int i = 0; i < 3; ++i) s[i] = v[i] + w[i];
    EXPECT_EQ(s, (Vector<Rational>{h, h, 2}));
  }
  {
    const auto [v, w] = counterexample_vectors<Rational>(5);
    EXPECT_EQ(v, (Vector<Rational>{-h, 1, 1, 1, 1}));
    EXPECT_EQ(w, (Vector<Rational>{1, -h, 1, 0, 0}));
    EXPECT_EQ(dot<Rational>(v, w), 0);
    Vector<Rational> s(5);
    for (int i = 0; i < 5; ++i) s[i] = v[i] + w[i];
    EXPECT_EQ(s, (Vector<Rational>{h, h, 2, 1, 1}));
  }
  EXPECT_THROW(counterexample_vectors<Rational>(2), UsageError);
}

TEST(BuildCounterexample, SpectrumAndEigenvectors) {
  const SymmetricMatrix m = build_counterexample(3, {1.0, 2.0, 3.0});
  const auto e = jacobi_eigendecomposition(m);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(e.eigenvalues[i], static_cast<double>(i + 1), 1e-10);
  // v is an eigenvector for lambda_v = 1, w for lambda_w = 2.
  EXPECT_LE(eigen_residual(m, Vector<double>{-0.5, 1.0, 1.0}, 1.0), 1e-12);
  EXPECT_LE(eigen_residual(m, Vector<double>{1.0, -0.5, 1.0}, 2.0), 1e-12);
}

TEST(BuildCounterexample, RestValueIsRepeated) {
  const SymmetricMatrix m = build_counterexample(4, {1.0, 2.0, 3.0});
  const auto e = jacobi_eigendecomposition(m);
  EXPECT_NEAR(e.eigenvalues[0], 1.0, 1e-10);
  EXPECT_NEAR(e.eigenvalues[1], 2.0, 1e-10);
  EXPECT_NEAR(e.eigenvalues[2], 3.0, 1e-10);
  EXPECT_NEAR(e.eigenvalues[3], 3.0, 1e-10);
  const auto check = verify_no_nonneg_eigenvector(m);
  EXPECT_TRUE(check.no_nonneg_eigenvector);
  EXPECT_EQ(check.diagnostics.size(), 3u);
}

TEST(BuildCounterexample, UsageErrors) {
  EXPECT_THROW(build_counterexample(2, {1.0, 2.0, 3.0}), UsageError);
  EXPECT_THROW(build_counterexample(3, {1.0, 2.0}), UsageError);
  EXPECT_THROW(build_counterexample(3, {1.0, 2.0, 3.0, 4.0}), UsageError);
  EXPECT_THROW(build_counterexample(3, {1.0, 1.0, 3.0}), UsageError);
  EXPECT_THROW(build_counterexample(3, {1.0, 2.0, 1.0 + 1e-7}), UsageError);
  EXPECT_THROW(build_counterexample(4, {1.0, 2.0, 3.0, 2.0}), UsageError);
  EXPECT_THROW(build_counterexample(3, {1.0, 2.0, NAN}), UsageError);
  EXPECT_NO_THROW(build_counterexample(5, {1.0, 2.0, 3.0, 3.0}));
}

TEST(VerifyNoNonnegEigenvector, Examples) {
  EXPECT_TRUE(verify_no_nonneg_eigenvector(build_counterexample(3, {1.0, 2.0, 3.0})).no_nonneg_eigenvector);
  EXPECT_FALSE(verify_no_nonneg_eigenvector(SymmetricMatrix(Matrix<double>::identity(3))).no_nonneg_eigenvector);
  const SymmetricMatrix d(Matrix<double>::from_rows({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}));
  const auto check = verify_no_nonneg_eigenvector(d);
  EXPECT_FALSE(check.no_nonneg_eigenvector);
  ASSERT_EQ(check.diagnostics.size(), 3u);
  EXPECT_NE(check.diagnostics[0].find("single sign"), std::string::npos);
}

TEST(RandomTwoEigenvalueMatrix, PlantedSpectrumAndDeterminism) {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    const auto r = analyze(random_two_eigenvalue_matrix(2, 0.0, 1.0, 1, seed));
    EXPECT_EQ(r.distinct_eigenvalue_count, 2u);
  }
  const auto a = random_two_eigenvalue_matrix(6, -1.0, 2.0, 2, 7);
  const auto b = random_two_eigenvalue_matrix(6, -1.0, 2.0, 2, 7);
  EXPECT_EQ(a.entries(), b.entries());
  EXPECT_NE(a.entries(), random_two_eigenvalue_matrix(6, -1.0, 2.0, 2, 8).entries());
}

TEST(RandomTwoEigenvalueMatrix, UsageErrors) {
  EXPECT_THROW(random_two_eigenvalue_matrix(3, 0.0, 1.0, 0, 0), UsageError);
  EXPECT_THROW(random_two_eigenvalue_matrix(3, 0.0, 1.0, 3, 0), UsageError);
  EXPECT_THROW(random_two_eigenvalue_matrix(1, 0.0, 1.0, 1, 0), UsageError);
  EXPECT_THROW(random_two_eigenvalue_matrix(3, 1.0, 1.0 + 1e-8, 1, 0), UsageError);
}

TEST(SpectralProperties, TwoEigenvalueMatricesHaveNonnegativeEigenvectors) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    const double l1 = u(rng);
    double l2 = u(rng);
    if (std::fabs(l1 - l2) < 1e-3) l2 = l1 + 1.0;
    const SymmetricMatrix m = random_two_eigenvalue_matrix(n, l1, l2, k, rng());
    const auto r = analyze(m);
    ASSERT_EQ(r.distinct_eigenvalue_count, 2u);
    ASSERT_TRUE(r.has_nonneg_eigenvector);
    for (const auto& e : r.per_eigenspace) {
      if (!e.verdict.has_nonneg()) continue;
      const auto& x = e.verdict.witness().x;
      ASSERT_GE(*std::min_element(x.begin(), x.end()), -1e-9);
      ASSERT_NEAR(sum<double>(x), 1.0, 1e-9);
      ASSERT_LE(eigen_residual(m, x, e.cluster.representative_value), 1e-6);
    }
  }
}

TEST(SpectralProperties, CounterexampleFamily) {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (std::size_t n = 3; n <= 8; ++n) {
    std::vector<std::vector<double>> tuples{{1.0, 2.0, 3.0}};
    for (int t = 0; t < 5; ++t) {
      // Random distinct lambda_v, lambda_w and rest values at least 1e-3 from both.
      std::vector<double> eig{u(rng), u(rng)};
      while (std::fabs(eig[0] - eig[1]) < 1e-3) eig[1] = u(rng);
      const std::size_t rest = std::uniform_int_distribution<std::size_t>(1, n - 2)(rng);
      while (eig.size() < 2 + rest) {
        const double x = u(rng);
        if (std::fabs(x - eig[0]) >= 1e-3 && std::fabs(x - eig[1]) >= 1e-3) eig.push_back(x);
      }
      tuples.push_back(eig);
    }
    for (const auto& eig : tuples) {
      const SymmetricMatrix m = build_counterexample(n, eig);
      const auto check = verify_no_nonneg_eigenvector(m);
      ASSERT_TRUE(check.no_nonneg_eigenvector) << "n=" << n;
      const auto r = analyze(m);
      ASSERT_FALSE(r.has_nonneg_eigenvector) << "n=" << n;
      ASSERT_GE(r.distinct_eigenvalue_count, 3u);
    }
  }
}

TEST(SpectralProperties, SignScanAgreesWithLinearProgram) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    SymmetricMatrix m(testing::random_uniform_symmetric(rng, n));
    // Every few trials, use a matrix with a positive off-diagonal pattern so
    // that a single-signed eigenvector occurs.
    if (trial % 3 == 0) {
      Matrix<double> a = m.entries();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = std::fabs(a(i, j));
      m = SymmetricMatrix(a);
    }
    const auto r = analyze(m);
    for (const auto& e : r.per_eigenspace) {
      ASSERT_EQ(e.cluster.space.dim(), 1u);
      ASSERT_EQ(has_single_sign(e.cluster.space.basis_vector(0), 1e-9), e.verdict.has_nonneg()) << "trial " << trial;
    }
    ASSERT_EQ(verify_no_nonneg_eigenvector(m).no_nonneg_eigenvector, !r.has_nonneg_eigenvector);
  }
}

TEST(SpectralProperties, ReportIsInternallyConsistent) {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const auto r = analyze(SymmetricMatrix(testing::random_uniform_symmetric(rng, n)));
    bool any = false;
    for (const auto& e : r.per_eigenspace) any = any || e.verdict.has_nonneg();
    ASSERT_EQ(any, r.has_nonneg_eigenvector);
    ASSERT_EQ(r.theorem_applicable, r.distinct_eigenvalue_count <= 2);
    ASSERT_EQ(r.per_eigenspace.size(), r.distinct_eigenvalue_count);
  }
}

}  // namespace
}  // namespace nonneg
