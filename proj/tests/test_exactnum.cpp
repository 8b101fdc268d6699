#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "chaingeo/error.hpp"
#include "chaingeo/matrix.hpp"

using namespace chaingeo;

namespace {

const GaussianRational I = GaussianRational::i();

GaussianRational small(std::mt19937_64& rng, int h = 5) {
  std::uniform_int_distribution<int> num(-h, h), den(1, h);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = small(rng);
  return a;
}

Matrix random_low_rank(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k) {
  return random_matrix(rng, r, k) * random_matrix(rng, k, c);
}

Matrix standard_h(std::size_t m, std::size_t n) {
  Matrix h(m + n, m + n);
  for (std::size_t i = 0; i < m; ++i) {
    h(i, n + i) = 1;
    h(n + i, i) = 1;
  }
  for (std::size_t i = m; i < n; ++i) h(i, i) = -1;
  return h;
}

}  // namespace

TEST(GaussianRational, ArithmeticIsExact) {
  GaussianRational a(Rational(1, 2), Rational(-1, 3));
  GaussianRational b(Rational(2), Rational(5, 7));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a - a, GaussianRational());
  EXPECT_EQ(I * I, GaussianRational(-1));
  EXPECT_EQ(a * a.conj(), GaussianRational(a.norm()));
  EXPECT_THROW(a / GaussianRational(), GeometryError);
}

TEST(GaussianRational, FractionStrings) {
  EXPECT_EQ(fraction_string(Rational(6, -4)), "-3/2");
  EXPECT_EQ(fraction_string(Rational(3)), "3/1");
  EXPECT_EQ(parse_fraction("10/4"), Rational(5, 2));
  EXPECT_EQ(parse_fraction("-7"), Rational(-7));
  EXPECT_THROW(parse_fraction("1/0"), GeometryError);
  EXPECT_THROW(parse_fraction(""), GeometryError);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix::identity(3)), 3u);
  EXPECT_EQ(rank(Matrix(2, 4)), 0u);
  // [v_inf | v_0] for (m,n) = (2,3): columns e1, e2, e4, e5 of C^5.
  Matrix vv(5, 4);
  vv(0, 0) = 1;
  vv(1, 1) = 1;
  vv(3, 2) = 1;
  vv(4, 3) = 1;
  EXPECT_EQ(rank(vv), 4u);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel(Matrix::identity(3)).cols(), 0u);
  EXPECT_EQ(rank(kernel(Matrix(2, 3))), 3u);
  // [0 2I 0; 0 0 2I] with k = 1, l = 2 blocks: kernel is span{e_1}.
  const std::size_t k = 1, l = 2;
  Matrix a(2 * l, k + 2 * l);
  for (std::size_t i = 0; i < 2 * l; ++i) a(i, k + i) = 2;
  Matrix ker = kernel(a);
  ASSERT_EQ(ker.cols(), k);
  EXPECT_EQ(ker, Matrix::unit(k + 2 * l, 0));
}

TEST(Solve, RoundTripAndErrors) {
  std::mt19937_64 rng(4);
  Matrix a = random_matrix(rng, 4, 3);
  Matrix x = random_matrix(rng, 3, 2);
  EXPECT_EQ(solve(a, a * x), x);
  Matrix sing = random_low_rank(rng, 3, 3, 2);
  EXPECT_THROW(inverse(sing), GeometryError);
  EXPECT_EQ(determinant(sing), GaussianRational());
  Matrix inv_src = random_matrix(rng, 4, 4);
  EXPECT_EQ(inverse(inv_src) * inv_src, Matrix::identity(4));
}

TEST(Determinant, MultiplicativeOnSamples) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3);
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
  }
}

TEST(Signature, Examples) {
  EXPECT_EQ(hermitian_signature(standard_h(1, 2)), (Signature{1, 2, 0}));
  EXPECT_EQ(hermitian_signature(Matrix{{0, 1}, {1, 0}}), (Signature{1, 1, 0}));
  EXPECT_EQ(hermitian_signature(Matrix{{0, I}, {-I, 0}}), (Signature{1, 1, 0}));
  EXPECT_EQ(hermitian_signature(Matrix(3, 3)), (Signature{0, 0, 3}));
  EXPECT_THROW(hermitian_signature(Matrix{{0, 1}, {2, 0}}), GeometryError);
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = m; n <= 5; ++n)
      EXPECT_EQ(hermitian_signature(standard_h(m, n)), (Signature{m, n, 0}));
}

TEST(Signature, CongruenceInvariance) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 5, r = 1 + t % n;
    Matrix b = random_matrix(rng, r, n);
    Matrix d(r, r);
    for (std::size_t i = 0; i < r; ++i) d(i, i) = (i % 2) ? -1 : 1;
    Matrix a = b.adjoint() * d * b;
    Signature s = hermitian_signature(a);
    EXPECT_EQ(s.plus + s.minus + s.zero, n);
    EXPECT_EQ(s.zero, n - rank(a));
    Matrix p = random_matrix(rng, n, n);
    if (determinant(p).is_zero()) continue;
    EXPECT_EQ(hermitian_signature(p.adjoint() * a * p), s);
  }
}

TEST(Rank, AdjointInvariance) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    const std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 5, k = t % 4;
    Matrix a = k == 0 ? random_matrix(rng, r, c) : random_low_rank(rng, r, c, k);
    ASSERT_EQ(rank(a), rank(a.adjoint()));
    Matrix ker = kernel(a);
    ASSERT_EQ(ker.cols(), c - rank(a));
    ASSERT_TRUE((a * ker).is_zero());
  }
}

TEST(Cayley, PreservesForm) {
  std::mt19937_64 rng(9);
  const Matrix h = standard_h(1, 2);
  EXPECT_EQ(cayley_h_unitary(Matrix(3, 3), h), Matrix::identity(3));
  int done = 0;
  while (done < 50) {
    Matrix s = random_matrix(rng, 3, 3);
    s = s - s.adjoint();
    Matrix k = h * s;  // h-anti-Hermitian since h^2 = Id
    Matrix g, g_inv;
    try {
      g = cayley_h_unitary(k, h);
      g_inv = cayley_h_unitary(-k, h);
    } catch (const GeometryError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::SingularCayley);
      continue;
    }
    EXPECT_TRUE((g.adjoint() * h * g - h).is_zero());
    EXPECT_EQ(g * g_inv, Matrix::identity(3));
    ++done;
  }
  try {
    cayley_h_unitary(Matrix::identity(3), h);
    FAIL() << "expected NotAntiHermitian";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAntiHermitian);
  }
  // K = diag(-1, ...) style singular case: I + K singular.
  Matrix k(3, 3);
  k(1, 1) = I;  // middle entry: K*H + HK = (-i)(-1) + (-1)(i) = 0, and 1 + i != 0
  EXPECT_NO_THROW(cayley_h_unitary(k, h));
}

TEST(Signature, AgreesWithEigenvalueCounts) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + t % 7, r = 1 + (t / 7) % n;
    Matrix b = random_matrix(rng, r, n);
    Matrix d(r, r);
    for (std::size_t i = 0; i < r; ++i) d(i, i) = (t + i) % 3 == 0 ? -1 : 1;
    Matrix a = b.adjoint() * d * b;
    Eigen::MatrixXcd f(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f(i, j) = a(i, j).to_complex();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(f);
    const double tol = 1e-8 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    Signature fl;
    for (auto ev : es.eigenvalues()) (ev > tol ? fl.plus : ev < -tol ? fl.minus : fl.zero) += 1;
    ASSERT_EQ(hermitian_signature(a), fl) << a.to_string();
  }
}
