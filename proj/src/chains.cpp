#include "chaingeo/chains.hpp"

#include "chaingeo/error.hpp"

namespace chaingeo {

namespace {

const GaussianRational kHalf(Rational(1, 2));

// Frame point of T_k: top diag(i I_k, 2 I), middle [0, 2I; 0, 0], bottom I.
ShilovPoint tk_frame_point(const HermSpace& s, std::size_t k) {
  const std::size_t m = s.m;
  Matrix b(s.dim(), m);
  for (std::size_t j = 0; j < m; ++j) {
    b(j, j) = j < k ? GaussianRational::i() : GaussianRational(2);
    if (j >= k) b(m + j - k, j) = 2;
    b(s.n + j, j) = 1;
  }
  return {s, b};
}

}  // namespace

std::size_t min_vertical_index(const HermSpace& space) {
  return 2 * space.m > space.n ? 2 * space.m - space.n : 0;
}

MChain standard_chain(const HermSpace& s, std::size_t k) {
  require(k >= min_vertical_index(s) && k <= s.m, ErrorKind::PreconditionViolation,
          "T_k needs max(0, 2m-n) <= k <= m");
  const std::size_t m = s.m;
  Matrix b(s.dim(), 2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    b(j, j) = 1;
    if (j >= k) {
      b(m + j - k, j) = 1;
      b(s.n + j, j) = 1;
    }
    b(s.n + j, m + j) = 1;
  }
  return MChain(Subspace(s, b), v_zero(s), tk_frame_point(s, k));
}

std::size_t intersection_index(const ShilovPoint& x, const MChain& t) {
  return intersect(x.subspace(), t.subspace()).dim();
}

ShilovPoint parametrize_Tk(const HermSpace& s, std::size_t k, const Matrix& e, const Matrix& u,
                           const Matrix& c) {
  const std::size_t m = s.m, r = m - k;
  require(k >= min_vertical_index(s) && k <= m, ErrorKind::PreconditionViolation, "index out of range");
  require(e.rows() == r && e.cols() == k && u.rows() == r && u.cols() == r && c.rows() == k &&
              c.cols() == k,
          ErrorKind::DimensionMismatch, "T_k parameter shapes");
  require(is_unitary(u), ErrorKind::PreconditionViolation, "U must be unitary");
  require(is_anti_hermitian(c), ErrorKind::NotAntiHermitian, "C must be anti-Hermitian");
  const Matrix lower = hstack(e, Matrix::identity(r) + u);
  Matrix top(m, m);
  top.set_block(0, 0, kHalf * (e.adjoint() * e) + c);
  top.set_block(0, k, e.adjoint() * u);
  top.set_block(k, 0, lower);
  Matrix mid(s.mid(), m);
  mid.set_block(0, 0, lower);
  return {s, vstack({top, mid, Matrix::identity(m)})};
}

TkParameters tk_parameters(const ShilovPoint& x, std::size_t k) {
  const HermSpace& s = x.space();
  const std::size_t r = s.m - k;
  const HeisPoint p = to_chart(x);
  require(p.X.rows_range(r, s.mid() - r).is_zero(), ErrorKind::PreconditionViolation,
          "point is not on T_k");
  TkParameters out{p.X.block(0, 0, r, k), p.X.block(0, k, r, r) - Matrix::identity(r),
                   p.Y.block(0, 0, k, k)};
  require(parametrize_Tk(s, k, out.E, out.U, out.C) == x, ErrorKind::PreconditionViolation,
          "point is not on T_k");
  return out;
}

Matrix central_matrix(const HermSpace& s, const Matrix& f) {
  Matrix g = Matrix::identity(s.dim());
  g.set_block(0, s.n, f);
  return g;
}

std::optional<Matrix> central_translation(const Subspace& v1, const Subspace& v2) {
  const HermSpace& s = v1.space();
  require(s == v2.space(), ErrorKind::DimensionMismatch, "subspaces of different spaces");
  // (0,F) v1 lies in v2 iff P3* F W3 = -P* h W for P a basis of v2's complement.
  const Matrix p = orth_complement(v2).basis();
  const Matrix p3h = p.rows_range(s.n, s.m).adjoint();
  const Matrix w3 = v1.basis().rows_range(s.n, s.m);
  const Matrix rhs = -(p.adjoint() * s.apply_h(v1.basis()));
  return solve_u(s.m, [&](const Matrix& f) { return p3h * f * w3; }, rhs);
}

Matrix vinf_trace(const Subspace& v) {
  const HermSpace& s = v.space();
  return column_space(intersect(v_inf(s).subspace(), v).basis().rows_range(0, s.m));
}

Circle project_chain(const MChain& t) {
  const HermSpace& s = t.space();
  const std::size_t k = intersection_index(v_inf(s), t);
  if (k == s.m) fail(ErrorKind::VerticalChain, "vertical chain projects to a single point");
  const auto& [x, y] = t.frame();
  std::optional<HeisPoint> p;
  for (const ShilovPoint* q : {&x, &y}) {
    try {
      p = to_chart(*q);
      break;
    } catch (const GeometryError&) {
    }
  }
  // Frames of our chains always have a chart point, but a chain through
  // v_inf may be framed at v_inf; move along the chain then.
  for (long j = 1; !p && j <= static_cast<long>(s.m) + 2; ++j) {
    try {
      p = to_chart(t.point(GaussianRational(0, j) * Matrix::identity(s.m)));
    } catch (const GeometryError&) {
    }
  }
  if (!p) fail(ErrorKind::NotTransverseToVinf, "no chart point found on the chain");
  const Matrix g = central_matrix(s, -p->Y);
  return {k, t.transformed(g), HeisPoint{p->X, Matrix(s.m, s.m)}};
}

bool circle_equal(const Circle& a, const Circle& b) {
  if (a.k != b.k) return false;
  return central_translation(a.witness.subspace(), b.witness.subspace()).has_value();
}

MChain lift_circle(const Circle& c, const ShilovPoint& t) {
  const HermSpace& s = t.space();
  to_chart(t);
  const auto f = central_translation(t.subspace(), c.witness.subspace());
  if (!f) fail(ErrorKind::NotOnCircle, "point does not project onto the circle");
  return c.witness.transformed(central_matrix(s, -*f));
}

USubspace chain_stabilizer_M(const MChain& t) {
  const std::size_t m = t.space().m;
  const Matrix z = vinf_trace(t.subspace());
  std::vector<Matrix> gens;
  for (const Matrix& b : u_basis(z.cols())) gens.push_back(z * b * z.adjoint());
  return USubspace::span(m, gens);
}

USubspace chain_stabilizer_M_by_solving(const MChain& t) {
  const HermSpace& s = t.space();
  const Matrix p = orth_complement(t.subspace()).basis();
  const Matrix p3h = p.rows_range(s.n, s.m).adjoint();
  const Matrix w3 = t.basis().rows_range(s.n, s.m);
  return kernel_u(s.m, [&](const Matrix& f) { return p3h * f * w3; });
}

Matrix s0_element(const HermSpace& s, std::size_t k, const Matrix& y, const Matrix& x,
                  const Matrix& c11, const Matrix& c22) {
  const std::size_t m = s.m;
  require(k <= m && s.n + k >= 2 * m, ErrorKind::PreconditionViolation, "S_0 needs n - 2m + k >= 0");
  require(y.rows() == k && y.cols() == k && x.rows() == k && x.cols() == m - k &&
              c11.rows() == m - k && c22.rows() == s.n + k - 2 * m,
          ErrorKind::DimensionMismatch, "S_0 block shapes");
  require(is_unitary(c11) && is_unitary(c22), ErrorKind::PreconditionViolation, "C blocks must be unitary");
  const GaussianRational det_y = determinant(y);
  require(!det_y.is_zero(), ErrorKind::PreconditionViolation, "Y must be invertible");
  const GaussianRational mu = det_y.conj() / det_y;
  Matrix a(m, m);
  a.set_block(0, 0, y);
  a.set_block(0, k, x);
  a.set_block(k, k, mu * c11);
  return block_diagonal({a, mu * block_diagonal({c11, c22}), inverse(a).adjoint()});
}

bool in_id_plus_unitary(const Matrix& m) {
  return m.is_square() && is_unitary(m - Matrix::identity(m.rows()));
}

}  // namespace chaingeo
