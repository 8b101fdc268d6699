#include <gtest/gtest.h>

#include "chaingeo/error.hpp"
#include "chaingeo/hermitian.hpp"
#include "chaingeo/sampler.hpp"

using namespace chaingeo;

namespace {

Matrix e(const HermSpace& s, std::size_t one_based) { return Matrix::unit(s.dim(), one_based - 1); }

Matrix cols(std::initializer_list<Matrix> vs) {
  Matrix out = *vs.begin();
  for (auto it = vs.begin() + 1; it != vs.end(); ++it) out = hstack(out, *it);
  return out;
}

}  // namespace

TEST(HermSpace, FormAndSignature) {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = m; n <= 5; ++n) {
      HermSpace s(m, n);
      Matrix h = s.h();
      EXPECT_TRUE(is_hermitian(h));
      EXPECT_EQ(hermitian_signature(h), (Signature{m, n, 0}));
      EXPECT_EQ(h * h, Matrix::identity(m + n));
    }
  EXPECT_THROW(HermSpace(3, 2), GeometryError);
  EXPECT_THROW(HermSpace(0, 2), GeometryError);
}

TEST(Pairing, Examples) {
  HermSpace s(2, 3);
  EXPECT_EQ(pairing(s, e(s, 1), e(s, s.n + 1)), GaussianRational(1));
  EXPECT_EQ(pairing(s, e(s, s.m + 1), e(s, s.m + 1)), GaussianRational(-1));
  EXPECT_EQ(pairing(s, e(s, 1), e(s, 1)), GaussianRational(0));
  EXPECT_THROW(pairing(s, Matrix(3, 1), e(s, 1)), GeometryError);
}

TEST(Pairing, ConjugateSymmetric) {
  Sampler smp(HermSpace(2, 4), 5);
  for (int t = 0; t < 100; ++t) {
    Matrix u = smp.matrix(6, 1), v = smp.matrix(6, 1);
    EXPECT_EQ(pairing(smp.space(), u, v), pairing(smp.space(), v, u).conj());
    EXPECT_EQ(pairing(smp.space(), u, v), (u.adjoint() * smp.space().h() * v)(0, 0));
  }
}

TEST(Subspace, CanonicalBasisIsBasisIndependent) {
  Sampler smp(HermSpace(2, 3), 8);
  for (int t = 0; t < 50; ++t) {
    Matrix b = smp.matrix(5, 3);
    Matrix p = smp.invertible(3, 5);
    EXPECT_EQ(Subspace(smp.space(), b), Subspace(smp.space(), b * p));
  }
}

TEST(RestrictForm, Examples) {
  HermSpace s(2, 3);
  Subspace vinf(s, cols({e(s, 1), e(s, 2)}));
  EXPECT_TRUE(restrict_form(vinf).is_zero());
  EXPECT_EQ(restrict_form(Subspace(s, e(s, 3))), (Matrix{{-1}}));
}

TEST(OrthComplement, Examples) {
  HermSpace s(2, 4);
  Subspace vinf(s, cols({e(s, 1), e(s, 2)}));
  Subspace expected(s, cols({e(s, 1), e(s, 2), e(s, 3), e(s, 4)}));
  EXPECT_EQ(orth_complement(vinf), expected);
  EXPECT_EQ(orth_complement(Subspace(s, Matrix::identity(6))).dim(), 0u);
}

TEST(OrthComplement, ReversesInclusionAndComplementsDimension) {
  Sampler smp(HermSpace(2, 3), 13);
  const HermSpace& s = smp.space();
  for (int t = 0; t < 500; ++t) {
    const std::size_t a = 1 + t % 4, b = a + (t / 4) % (5 - a);
    Matrix big = smp.matrix(5, b, 3);
    Subspace sb(s, big), sa(s, big.cols_range(0, a));
    Subspace pa = orth_complement(sa), pb = orth_complement(sb);
    ASSERT_EQ(pa.dim() + sa.dim(), 5u);
    ASSERT_TRUE(pa.contains(pb));
    ASSERT_TRUE(orth_complement(pa).contains(sa));
    for (std::size_t i = 0; i < pa.dim(); ++i)
      for (std::size_t j = 0; j < sa.dim(); ++j)
        ASSERT_TRUE(pairing(s, pa.basis().col(i), sa.basis().col(j)).is_zero());
  }
}

TEST(SpanIntersect, Examples) {
  HermSpace s(2, 3);
  Subspace vinf(s, cols({e(s, 1), e(s, 2)}));
  Subspace v0(s, cols({e(s, 4), e(s, 5)}));
  EXPECT_EQ(span(vinf, v0), Subspace(s, cols({e(s, 1), e(s, 2), e(s, 4), e(s, 5)})));
  EXPECT_EQ(intersect(vinf, vinf), vinf);
  EXPECT_EQ(intersect(vinf, v0).dim(), 0u);
}

TEST(SpanIntersect, ModularLaw) {
  Sampler smp(HermSpace(3, 4), 17);
  const HermSpace& s = smp.space();
  for (int t = 0; t < 200; ++t) {
    const std::size_t a = 1 + t % 5, b = 1 + (t / 5) % 5, shared = t % 3;
    Matrix common = smp.matrix(7, shared, 3);
    Subspace sa(s, hstack(common, smp.matrix(7, a, 3)));
    Subspace sb(s, hstack(common, smp.matrix(7, b, 3)));
    ASSERT_EQ(span(sa, sb).dim() + intersect(sa, sb).dim(), sa.dim() + sb.dim());
    ASSERT_TRUE(sa.contains(intersect(sa, sb)) && sb.contains(intersect(sa, sb)));
  }
}

TEST(RestrictForm, SignatureIndependentOfBasis) {
  Sampler smp(HermSpace(2, 3), 19);
  for (int t = 0; t < 100; ++t) {
    Matrix b = smp.matrix(5, 1 + t % 5, 3);
    Matrix p = smp.invertible(b.cols(), 4);
    Matrix h = smp.space().h();
    EXPECT_EQ(hermitian_signature(restrict_form(Subspace(smp.space(), b))),
              hermitian_signature((b * p).adjoint() * h * (b * p)));
  }
}
