#include <gtest/gtest.h>

#include "chaingeo/chains.hpp"
#include "chaingeo/error.hpp"
#include "chaingeo/sampler.hpp"

using namespace chaingeo;

namespace {

const std::vector<std::pair<int, int>> kSizes{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};

Matrix e(const HermSpace& s, std::size_t one_based) { return Matrix::unit(s.dim(), one_based - 1); }

std::vector<std::size_t> admissible_k(const HermSpace& s) {
  std::vector<std::size_t> ks;
  for (std::size_t k = min_vertical_index(s); k <= s.m; ++k) ks.push_back(k);
  return ks;
}

}  // namespace

TEST(StandardChain, Invariants) {
  for (auto [m, n] : kSizes) {
    HermSpace s(m, n);
    for (std::size_t k : admissible_k(s)) {
      MChain t = standard_chain(s, k);
      EXPECT_EQ(t.subspace().dim(), 2 * s.m);
      EXPECT_EQ(hermitian_signature(restrict_form(t.subspace())), (Signature{s.m, s.m, 0}));
      EXPECT_EQ(intersection_index(v_inf(s), t), k);
      EXPECT_TRUE(member(v_zero(s), t));
    }
    if (min_vertical_index(s) > 0) EXPECT_THROW(standard_chain(s, 0), GeometryError);
  }
}

TEST(StandardChain, OrthogonalComplement) {
  for (auto [m, n] : kSizes) {
    HermSpace s(m, n);
    for (std::size_t k : admissible_k(s)) {
      Matrix perp(s.dim(), 0);
      for (std::size_t j = 1; j <= s.m - k; ++j) perp = hstack(perp, e(s, s.m + j) + e(s, s.n + j + k));
      for (std::size_t l = s.m - k + 1; l <= s.mid(); ++l) perp = hstack(perp, e(s, s.m + l));
      EXPECT_EQ(orth_complement(standard_chain(s, k).subspace()), Subspace(s, perp));
    }
  }
}

TEST(IntersectionIndex, InvariantUnderQ) {
  for (auto [m, n] : kSizes) {
    Sampler smp(HermSpace(m, n), 3);
    const HermSpace& s = smp.space();
    EXPECT_EQ(intersection_index(v_inf(s), chain_through(v_inf(s), v_zero(s))), s.m);
    for (std::size_t k : admissible_k(s)) {
      MChain t = smp.chain(k);
      EXPECT_EQ(intersection_index(v_inf(s), t), k);
    }
  }
}

TEST(ParametrizeTk, MembershipAndChartForm) {
  for (auto [m, n] : kSizes) {
    Sampler smp(HermSpace(m, n), 5);
    const HermSpace& s = smp.space();
    for (std::size_t k : admissible_k(s)) {
      MChain t = standard_chain(s, k);
      for (int trial = 0; trial < 5; ++trial) {
        Matrix ee = smp.matrix(s.m - k, k), u = smp.unitary(s.m - k), c = smp.anti_hermitian(k);
        ShilovPoint x = parametrize_Tk(s, k, ee, u, c);
        EXPECT_TRUE(member(x, t));
        HeisPoint p = to_chart(x);
        Matrix expected(s.mid(), s.m);
        expected.set_block(0, 0, hstack(ee, Matrix::identity(s.m - k) + u));
        EXPECT_EQ(p.X, expected);
        TkParameters back = tk_parameters(x, k);
        EXPECT_EQ(back.E, ee);
        EXPECT_EQ(back.U, u);
        EXPECT_EQ(back.C, c);
      }
    }
  }
}

TEST(ParametrizeTk, Examples) {
  HermSpace s(2, 4);
  // k = m: the vertical fiber over 0.
  Matrix c{{GaussianRational(0, 1), 2}, {-2, GaussianRational(0, 3)}};
  EXPECT_EQ(to_chart(parametrize_Tk(s, 2, Matrix(0, 2), Matrix(0, 0), c)), (HeisPoint{Matrix(2, 2), c}));
  // k = 0, U = Id: X = [2 Id; 0], Y = 0.
  HeisPoint p = to_chart(parametrize_Tk(s, 0, Matrix(2, 0), Matrix::identity(2), Matrix(0, 0)));
  EXPECT_EQ(p.X, 2 * Matrix::identity(2));
  EXPECT_TRUE(p.Y.is_zero());
  EXPECT_THROW(parametrize_Tk(s, 0, Matrix(2, 0), 2 * Matrix::identity(2), Matrix(0, 0)), GeometryError);
}

TEST(ProjectChain, CentralTranslatesShareTheCircle) {
  for (auto [m, n] : kSizes) {
    Sampler smp(HermSpace(m, n), 7);
    const HermSpace& s = smp.space();
    for (std::size_t k : admissible_k(s)) {
      MChain t = standard_chain(s, k);
      if (k == s.m) {
        try {
          project_chain(t);
          FAIL();
        } catch (const GeometryError& err) {
          EXPECT_EQ(err.kind(), ErrorKind::VerticalChain);
        }
        continue;
      }
      Circle ck = project_chain(t);
      EXPECT_EQ(ck.k, k);
      EXPECT_TRUE(circle_equal(ck, ck));
      MChain moved = t.transformed(central_matrix(s, smp.anti_hermitian(s.m)));
      EXPECT_TRUE(circle_equal(project_chain(moved), ck));
      // A generic L element moves C_k.
      MChain other = t.transformed(smp.l_element().matrix(s));
      EXPECT_FALSE(circle_equal(project_chain(other), ck));
    }
  }
}

TEST(LiftCircle, UniqueLiftThroughPoint) {
  for (auto [m, n] : kSizes) {
    Sampler smp(HermSpace(m, n), 9);
    const HermSpace& s = smp.space();
    for (std::size_t k : admissible_k(s)) {
      if (k == s.m) continue;
      MChain t = smp.chain(k);
      Circle c = project_chain(t);
      EXPECT_EQ(lift_circle(c, from_chart(s, c.marked)), c.witness);
      // Lift through a point of T returns T.
      ShilovPoint x = t.point(smp.anti_hermitian(s.m, 3));
      EXPECT_EQ(lift_circle(c, x), t);
      // Lift through a translated point returns the translated chain.
      const Matrix f = smp.anti_hermitian(s.m, 3);
      const Matrix g = central_matrix(s, f);
      EXPECT_EQ(lift_circle(c, transformed(g, x)), t.transformed(g));
      // A point over a different W point is off the circle.
      HeisPoint off = to_chart(x);
      off.X = off.X + smp.matrix(s.mid(), s.m);
      EXPECT_THROW(lift_circle(c, from_chart(s, off)), GeometryError);
    }
  }
}

TEST(Stabilizer, StandardChainsGiveTopLeftBlocks) {
  for (auto [m, n] : kSizes) {
    Sampler smp(HermSpace(m, n), 11);
    const HermSpace& s = smp.space();
    for (std::size_t k : admissible_k(s)) {
      const USubspace ek = USubspace::top_left(s.m, k);
      MChain t = standard_chain(s, k);
      EXPECT_EQ(chain_stabilizer_M(t), ek);
      EXPECT_EQ(chain_stabilizer_M_by_solving(t), ek);
      MChain nt = t.transformed(smp.n_element().matrix(s));
      EXPECT_EQ(chain_stabilizer_M(nt), ek);
      EXPECT_EQ(chain_stabilizer_M_by_solving(nt), ek);
    }
  }
}

TEST(Stabilizer, FormulaMatchesSolveAndActsTrivially) {
  for (auto [m, n] : kSizes) {
    Sampler smp(HermSpace(m, n), 13);
    const HermSpace& s = smp.space();
    for (std::size_t k : admissible_k(s)) {
      MChain t = smp.chain(k);
      USubspace mt = chain_stabilizer_M(t);
      EXPECT_EQ(mt.dim(), k * k);
      EXPECT_EQ(mt, chain_stabilizer_M_by_solving(t));
      for (const Matrix& f : mt.basis()) EXPECT_EQ(t.transformed(central_matrix(s, f)), t);
      Matrix outside = smp.anti_hermitian(s.m);
      if (!mt.contains(outside)) EXPECT_FALSE(t.transformed(central_matrix(s, outside)) == t);
    }
  }
}

TEST(SMap, Examples) {
  for (std::size_t m = 1; m <= 4; ++m) {
    const Matrix id = Matrix::identity(m);
    for (std::size_t k = 0; k <= m; ++k)
      EXPECT_EQ(S_map(id.cols_range(0, k), id.cols_range(0, k)), USubspace::top_left(m, k));
    EXPECT_EQ(S_map(Matrix(m, 0), id).dim(), 0u);
    EXPECT_EQ(S_map(id, id), USubspace::full(m));
    EXPECT_EQ(S_map(id, id).dim(), m * m);
  }
}

TEST(S0, ElementsFixTheTriple) {
  for (auto [m, n] : kSizes) {
    Sampler smp(HermSpace(m, n), 17);
    const HermSpace& s = smp.space();
    const Matrix h = s.h();
    for (std::size_t k : admissible_k(s)) {
      MChain t = standard_chain(s, k);
      for (int trial = 0; trial < 5; ++trial) {
        Matrix g = s0_element(s, k, smp.invertible(k, 3), smp.matrix(k, s.m - k, 3), smp.unitary(s.m - k),
                              smp.unitary(s.n + k - 2 * s.m));
        EXPECT_EQ(g.adjoint() * h * g, h);
        EXPECT_EQ(transformed(g, v_inf(s)), v_inf(s));
        EXPECT_EQ(transformed(g, v_zero(s)), v_zero(s));
        EXPECT_EQ(t.transformed(g), t);
      }
    }
  }
}

TEST(UnitaryCoset, IdentityPairPreservesCoset) {
  Sampler smp(HermSpace(2, 3), 19);
  for (int t = 0; t < 20; ++t) {
    Matrix c = smp.unitary(2), x = smp.unitary(2);
    EXPECT_TRUE(in_id_plus_unitary(Matrix::identity(2) + x));
    EXPECT_TRUE(in_id_plus_unitary(c * (Matrix::identity(2) + x) * c.adjoint()));
  }
}
