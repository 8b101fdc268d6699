#include <gtest/gtest.h>

#include "chaingeo/error.hpp"
#include "chaingeo/chains.hpp"
#include "chaingeo/sampler.hpp"

using namespace chaingeo;

namespace {

const std::vector<std::pair<int, int>> kSizes{{1, 1}, {1, 2}, {2, 3}, {2, 5}, {3, 4}};

// Dimension of {F : (0,F) x = x}.
std::size_t chain_stabilizer_M_by_solving_point(const ShilovPoint& x) {
  const HermSpace& s = x.space();
  const Matrix p = orth_complement(x.subspace()).basis();
  const Matrix p3h = p.rows_range(s.n, s.m).adjoint();
  const Matrix w3 = x.basis().rows_range(s.n, s.m);
  return kernel_u(s.m, [&](const Matrix& f) { return p3h * f * w3; }).dim();
}

}  // namespace

TEST(Chart, Examples) {
  HermSpace s(2, 3);
  EXPECT_EQ(to_chart(v_zero(s)), (HeisPoint{Matrix(1, 2), Matrix(2, 2)}));
  // [I; 0; d] normalizes to [d^{-1}; 0; I] and d^{-1} = -d.
  EXPECT_EQ(to_chart(v_d(s, {1, -1})), (HeisPoint{Matrix(1, 2), -d_matrix({1, -1})}));
  EXPECT_EQ(from_chart(s, HeisPoint{Matrix(1, 2), Matrix(2, 2)}), v_zero(s));
  try {
    to_chart(v_inf(s));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotTransverseToVinf);
  }
}

TEST(Chart, RoundTrip) {
  for (auto [m, n] : kSizes) {
    Sampler smp(HermSpace(m, n), 3);
    for (int t = 0; t < 40; ++t) {
      HeisPoint p = smp.heis_point();
      ShilovPoint x = from_chart(smp.space(), p);
      EXPECT_TRUE(is_shilov_point(x.subspace()));
      EXPECT_TRUE(transverse(x, v_inf(smp.space())));
      EXPECT_EQ(to_chart(x), p);
      // A point given by another basis has the same chart coordinates.
      ShilovPoint y = transformed(smp.h_unitary(), x);
      if (transverse(y, v_inf(smp.space()))) EXPECT_EQ(from_chart(smp.space(), to_chart(y)), y);
    }
  }
}

TEST(NElement, MatrixIsHUnitaryAndMatchesChartAction) {
  for (auto [m, n] : kSizes) {
    Sampler smp(HermSpace(m, n), 5);
    const HermSpace& s = smp.space();
    const Matrix h = s.h();
    for (int t = 0; t < 30; ++t) {
      NElement g = smp.n_element();
      Matrix gm = g.matrix(s);
      EXPECT_EQ(gm.adjoint() * h * gm, h);
      HeisPoint p = smp.heis_point();
      EXPECT_EQ(from_chart(s, act_N(g, p)), transformed(gm, from_chart(s, p)));
    }
  }
}

TEST(NElement, Examples) {
  HermSpace s(2, 3);
  Sampler smp(s, 6);
  HeisPoint p = smp.heis_point();
  EXPECT_EQ(act_N(NElement::identity(s), p), p);
  NElement g = smp.n_element();
  EXPECT_EQ(act_N(g, HeisPoint{Matrix(1, 2), Matrix(2, 2)}), (HeisPoint{g.E, g.F}));
  EXPECT_THROW(NElement(Matrix(1, 2), Matrix::identity(2)), GeometryError);
}

TEST(NElement, GroupLaw) {
  for (auto [m, n] : kSizes) {
    Sampler smp(HermSpace(m, n), 7);
    const HermSpace& s = smp.space();
    for (int t = 0; t < 30; ++t) {
      NElement a = smp.n_element(), b = smp.n_element();
      HeisPoint p = smp.heis_point();
      EXPECT_EQ(act_N(a * b, p), act_N(a, act_N(b, p)));
      EXPECT_EQ((a * b).matrix(s), a.matrix(s) * b.matrix(s));
      EXPECT_EQ(act_N(a.inverse(), act_N(a, p)), p);
    }
  }
}

TEST(LElement, MatrixIsHUnitaryAndMatchesChartAction) {
  for (auto [m, n] : kSizes) {
    Sampler smp(HermSpace(m, n), 9);
    const HermSpace& s = smp.space();
    const Matrix h = s.h();
    for (int t = 0; t < 30; ++t) {
      LElement g = smp.l_element();
      Matrix gm = g.matrix(s);
      EXPECT_EQ(gm.adjoint() * h * gm, h);
      EXPECT_EQ(determinant(g.B), GaussianRational(1));
      HeisPoint p = smp.heis_point();
      EXPECT_EQ(from_chart(s, act_L(g, p)), transformed(gm, from_chart(s, p)));
      // L fixes v_inf and v_0.
      EXPECT_EQ(transformed(gm, v_zero(s)), v_zero(s));
      EXPECT_EQ(transformed(gm, v_inf(s)), v_inf(s));
    }
  }
}

TEST(LElement, Examples) {
  HermSpace s(2, 3);
  Sampler smp(s, 10);
  HeisPoint p = smp.heis_point();
  EXPECT_EQ(act_L(LElement::identity(s), p), p);
  Matrix a{{1, 2}, {0, GaussianRational(0, 1)}};
  LElement g(a, Matrix::identity(1));
  const GaussianRational det = determinant(a);
  EXPECT_EQ(act_L(g, p), (HeisPoint{det.conj() / det * p.X * a.adjoint(), a * p.Y * a.adjoint()}));
  EXPECT_THROW(LElement(Matrix(2, 2), Matrix::identity(1)), GeometryError);
  EXPECT_THROW(LElement(a, Matrix{{GaussianRational(0, 1)}}), GeometryError);
}

TEST(Projection, CentralElementsActVertically) {
  for (auto [m, n] : kSizes) {
    Sampler smp(HermSpace(m, n), 11);
    const HermSpace& s = smp.space();
    for (int t = 0; t < 20; ++t) {
      HeisPoint p = smp.heis_point();
      Matrix f = smp.anti_hermitian(s.m);
      EXPECT_EQ(project(act_N(NElement::central(s, f), p)), project(p));
      EXPECT_EQ(project(p).A, p.X);
    }
  }
}

TEST(Projection, CentralActionSimplyTransitiveOnFibers) {
  for (auto [m, n] : kSizes) {
    Sampler smp(HermSpace(m, n), 12);
    const HermSpace& s = smp.space();
    for (int t = 0; t < 20; ++t) {
      HeisPoint p = smp.heis_point();
      HeisPoint q{p.X, smp.anti_hermitian(s.m)};
      const Matrix f = q.Y - p.Y;
      EXPECT_EQ(act_N(NElement::central(s, f), p), q);
      // The linear solve finds the same, unique, translate.
      const auto found = central_translation(from_chart(s, p).subspace(), from_chart(s, q).subspace());
      ASSERT_TRUE(found.has_value());
      EXPECT_EQ(*found, f);
      const auto kernel = chain_stabilizer_M_by_solving_point(from_chart(s, p));
      EXPECT_EQ(kernel, 0u);
    }
  }
}

TEST(WSpace, Examples) {
  HermSpace s(2, 4);
  EXPECT_EQ(w_to_subspace(s, WPoint{Matrix(2, 2)}), span(v_inf(s).subspace(), v_zero(s).subspace()));
}

TEST(WSpace, BijectionAndFibers) {
  for (auto [m, n] : kSizes) {
    Sampler smp(HermSpace(m, n), 13);
    const HermSpace& s = smp.space();
    for (int t = 0; t < 40; ++t) {
      WPoint w{smp.matrix(s.mid(), s.m)};
      Subspace v = w_to_subspace(s, w);
      EXPECT_EQ(v.dim(), 2 * s.m);
      EXPECT_TRUE(v.contains(v_inf(s).subspace()));
      EXPECT_EQ(hermitian_signature(restrict_form(v)), (Signature{s.m, s.m, 0}));
      EXPECT_EQ(subspace_to_w(v), w);
      // The fiber over w lies in the vertical chain.
      HeisPoint p{w.A, smp.anti_hermitian(s.m)};
      EXPECT_TRUE(v.contains(from_chart(s, p).subspace()));
      HeisPoint off{w.A + smp.matrix(s.mid(), s.m), smp.anti_hermitian(s.m)};
      if (s.mid() > 0 && !(off.X == w.A)) EXPECT_FALSE(v.contains(from_chart(s, off).subspace()));
    }
  }
}
