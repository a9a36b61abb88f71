#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nonneg/nonneg.hpp"
#include "oracles.hpp"

namespace nonneg {
namespace {

using testing::cross;

TEST(ParseRational, AcceptsFractionsDecimalsAndExponents) {
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("-.25"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("3e-2"), Rational(3, 100));
  EXPECT_EQ(parse_rational("+12"), Rational(12));
  EXPECT_EQ(parse_rational("1.5E1"), Rational(15));
}

TEST(ParseRational, RejectsMalformedLiterals) {
  for (const char* bad : {"", "1/0", "abc", "1.2.3", "--1", "1/", "/2", ".", "1e", "0x10", "nan", "inf"})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Matrix, RejectsNonFiniteEntries) {
  EXPECT_THROW(Matrix<double>::from_rows({{1.0, NAN}}), UsageError);
  EXPECT_THROW(Matrix<double>::from_rows({{INFINITY}}), UsageError);
  EXPECT_THROW(Matrix<double>::from_rows(std::vector<std::vector<double>>{{1.0, 2.0}, {3.0}}), UsageError);
}

TEST(Orthonormalize, IdentityIsAlreadyOrthonormal) {
  const auto v = orthonormalize(Matrix<double>::identity(2), 1e-10);
  EXPECT_EQ(v.dim(), 2u);
  EXPECT_EQ(v.basis(), Matrix<double>::identity(2));
}

TEST(Orthonormalize, NormalizesASingleColumn) {
  const auto v = orthonormalize(Matrix<double>::from_rows({{3.0}, {4.0}}));
  ASSERT_EQ(v.dim(), 1u);
  EXPECT_NEAR(v.basis()(0, 0), 0.6, 1e-15);
  EXPECT_NEAR(v.basis()(1, 0), 0.8, 1e-15);
}

TEST(Orthonormalize, RejectsDuplicateDirection) {
  const auto v = orthonormalize(Matrix<double>::from_rows({{1.0, 2.0}, {0.0, 0.0}}), 1e-10);
  ASSERT_EQ(v.dim(), 1u);
  EXPECT_EQ(v.basis_vector(0), (Vector<double>{1.0, 0.0}));
}

TEST(Orthonormalize, EmptyInputGivesZeroSubspace) {
  const auto v = orthonormalize(Matrix<double>(4, 0));
  EXPECT_EQ(v.dim(), 0u);
  EXPECT_EQ(v.ambient_dim(), 4u);
  EXPECT_THROW(orthonormalize(Matrix<double>(0, 0)), UsageError);
}

TEST(Orthonormalize, ExactModeKeepsPrimitiveIntegerColumns) {
  const auto v = orthonormalize(
      Matrix<Rational>::from_rows({{Rational(-1, 2), Rational(1)}, {Rational(1), Rational(-1, 2)}, {Rational(1), Rational(1)}}));
  ASSERT_EQ(v.dim(), 2u);
  EXPECT_EQ(v.basis_vector(0), (Vector<Rational>{-1, 2, 2}));
  EXPECT_EQ(v.basis_vector(1), (Vector<Rational>{2, -1, 2}));
  EXPECT_EQ(dot<Rational>(v.basis_vector(0), v.basis_vector(1)), 0);
}

TEST(OrthogonalComplement, CoordinateAxes) {
  const auto v = orthonormalize(Matrix<double>::from_rows({{1.0}, {0.0}}));
  const auto p = orthogonal_complement(v);
  ASSERT_EQ(p.dim(), 1u);
  EXPECT_EQ(p.basis_vector(0), (Vector<double>{0.0, 1.0}));
}

TEST(OrthogonalComplement, FullSpaceGivesZeroSubspace) {
  EXPECT_EQ(orthogonal_complement(whole_space<double>(5)).dim(), 0u);
  EXPECT_EQ(orthogonal_complement(whole_space<Rational>(3)).dim(), 0u);
  EXPECT_EQ(orthogonal_complement(Subspace<double>(3)).dim(), 3u);
}

TEST(OrthogonalComplement, MatchesCrossProductOracle) {
  const std::array<double, 3> a{-0.5, 1.0, 1.0}, b{1.0, -0.5, 1.0};
  const auto c = cross(a, b);  // (1.5, 1.5, -0.75) = 0.75 * (2, 2, -1)
  EXPECT_DOUBLE_EQ(c[0] / c[2], -2.0);
  EXPECT_DOUBLE_EQ(c[1] / c[2], -2.0);

  const auto v = orthonormalize(Matrix<double>::from_rows({{a[0], b[0]}, {a[1], b[1]}, {a[2], b[2]}}));
  const auto p = orthogonal_complement(v);
  ASSERT_EQ(p.dim(), 1u);
  const Vector<double> u = p.basis_vector(0);
  const double cn = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
  const double sign = u[2] * c[2] > 0 ? 1.0 : -1.0;
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(u[i], sign * c[i] / cn, 1e-14);

  const auto vq = orthonormalize(Matrix<Rational>::from_rows(
      {{Rational(-1, 2), Rational(1)}, {Rational(1), Rational(-1, 2)}, {Rational(1), Rational(1)}}));
  const auto pq = orthogonal_complement(vq);
  ASSERT_EQ(pq.dim(), 1u);
  const Vector<Rational> uq = pq.basis_vector(0);
  EXPECT_EQ(uq[0] / uq[2], -2);
  EXPECT_EQ(uq[1] / uq[2], -2);
}

TEST(Project, Examples) {
  const auto xaxis = orthonormalize(Matrix<double>::from_rows({{1.0}, {0.0}}));
  EXPECT_EQ(project<double>(xaxis, Vector<double>{3.0, 7.0}), (Vector<double>{3.0, 0.0}));

  const Vector<double> x{0.3, -2.0, 5.5};
  EXPECT_EQ(project<double>(whole_space<double>(3), x), x);

  const auto v = orthonormalize(Matrix<double>::from_rows({{1.0, 0.0}, {2.0, 1.0}, {0.0, 3.0}}));
  for (std::size_t j = 0; j < v.dim(); ++j) {
    const Vector<double> b = v.basis_vector(j);
    const Vector<double> pb = project<double>(v, b);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(pb[i], b[i], 1e-15);
  }
  EXPECT_THROW(project<double>(v, Vector<double>{1.0}), UsageError);
}

TEST(Subspace, FromOrthogonalBasisChecksInvariant) {
  EXPECT_THROW(Subspace<double>::from_orthogonal_basis(Matrix<double>::from_rows({{1.0, 1.0}, {0.0, 1.0}})),
               UsageError);
  EXPECT_THROW(Subspace<Rational>::from_orthogonal_basis(Matrix<Rational>::from_rows({{Rational(0)}, {Rational(0)}})),
               UsageError);
  EXPECT_NO_THROW(Subspace<Rational>::from_orthogonal_basis(
      Matrix<Rational>::from_rows({{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}})));
}

TEST(SubspaceProperties, ProjectionIsIdempotentApprox) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  std::uniform_int_distribution<int> dim(1, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = dim(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    Matrix<double> a(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) a(i, j) = g(rng);
    const auto v = orthonormalize(a);
    Vector<double> x(n);
    for (auto& xi : x) xi = g(rng);
    const Vector<double> p1 = project<double>(v, x);
    const Vector<double> p2 = project<double>(v, p1);
    for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(p1[i], p2[i], 1e-12);
  }
}

TEST(SubspaceProperties, ComplementDimensionAndOrthogonality) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g;
  std::uniform_int_distribution<int> dim(1, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = dim(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, n + 1)(rng);
    Matrix<double> a(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) a(i, j) = g(rng);
    // Occasionally duplicate a column to exercise rank rejection.
    if (m >= 2 && trial % 5 == 0)
      for (std::size_t i = 0; i < n; ++i) a(i, 1) = 2.5 * a(i, 0);
    const auto v = orthonormalize(a);
    const auto p = orthogonal_complement(v);
    ASSERT_EQ(v.dim() + p.dim(), n);
    for (std::size_t j = 0; j < p.dim(); ++j)
      for (std::size_t l = 0; l < v.dim(); ++l)
        ASSERT_LE(std::fabs(dot<double>(p.basis_vector(j), v.basis_vector(l))), 1e-10);
  }
}

TEST(SubspaceProperties, ExactModeIsExactAndDeterministic) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = dim(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    const Matrix<Rational> a = testing::random_rational_matrix(rng, n, m);
    const auto v = orthonormalize(a);
    const auto v2 = orthonormalize(a);
    ASSERT_EQ(v.basis(), v2.basis());
    const auto p = orthogonal_complement(v);
    ASSERT_EQ(p.basis(), orthogonal_complement(v2).basis());
    ASSERT_EQ(v.dim() + p.dim(), n);
    for (std::size_t j = 0; j < p.dim(); ++j)
      for (std::size_t l = 0; l < v.dim(); ++l) ASSERT_EQ(dot<Rational>(p.basis_vector(j), v.basis_vector(l)), 0);

    Vector<Rational> x(n);
    for (auto& xi : x) xi = testing::random_rational(rng);
    const Vector<Rational> p1 = project<Rational>(v, x);
    ASSERT_EQ(project<Rational>(v, p1), p1);
    ASSERT_TRUE(testing::in_column_space_exact(a, p1));
    // x - P x is orthogonal to V.
    Vector<Rational> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = x[i] - p1[i];
    for (std::size_t l = 0; l < v.dim(); ++l) ASSERT_EQ(dot<Rational>(r, v.basis_vector(l)), 0);
  }
}

}  // namespace
}  // namespace nonneg
