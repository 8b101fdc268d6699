#include "chaingeo/heisenberg.hpp"

#include "chaingeo/error.hpp"

namespace chaingeo {

namespace {

const GaussianRational kHalf(Rational(1, 2));

}  // namespace

NElement::NElement(Matrix e, Matrix f) : E(std::move(e)), F(std::move(f)) {
  require(is_anti_hermitian(F) && E.cols() == F.rows(), ErrorKind::NotAntiHermitian,
          "N element needs anti-Hermitian F");
}

NElement NElement::identity(const HermSpace& space) {
  return {Matrix(space.mid(), space.m), Matrix(space.m, space.m)};
}

NElement NElement::central(const HermSpace& space, const Matrix& f) {
  return {Matrix(space.mid(), space.m), f};
}

Matrix NElement::matrix(const HermSpace& space) const {
  const std::size_t m = space.m, l = space.mid();
  require(E.rows() == l && E.cols() == m, ErrorKind::DimensionMismatch, "N element shape");
  Matrix g = Matrix::identity(space.dim());
  g.set_block(0, m, E.adjoint());
  g.set_block(0, space.n, F + kHalf * (E.adjoint() * E));
  g.set_block(m, space.n, E);
  return g;
}

NElement NElement::inverse() const { return {-E, -F}; }

NElement operator*(const NElement& a, const NElement& b) {
  return {a.E + b.E, a.F + b.F + kHalf * (a.E.adjoint() * b.E - b.E.adjoint() * a.E)};
}

LElement::LElement(Matrix a, Matrix b) : A(std::move(a)), B(std::move(b)) {
  require(A.is_square() && !determinant(A).is_zero(), ErrorKind::PreconditionViolation,
          "L element needs invertible A");
  require(is_unitary(B) && determinant(B) == GaussianRational(1), ErrorKind::PreconditionViolation,
          "L element needs B unitary with det 1");
}

LElement LElement::identity(const HermSpace& space) {
  return {Matrix::identity(space.m), Matrix::identity(space.mid())};
}

GaussianRational LElement::phase() const {
  const GaussianRational a = determinant(A);
  return a.conj() / a;
}

Matrix LElement::matrix(const HermSpace& space) const {
  require(A.rows() == space.m && B.rows() == space.mid(), ErrorKind::DimensionMismatch,
          "L element shape");
  return block_diagonal({A, phase() * B, chaingeo::inverse(A).adjoint()});
}

HeisPoint to_chart(const ShilovPoint& x) {
  const HermSpace& s = x.space();
  const Matrix& b = x.basis();
  Matrix inv;
  try {
    inv = inverse(b.rows_range(s.n, s.m));
  } catch (const GeometryError&) {
    fail(ErrorKind::NotTransverseToVinf, "point meets v_inf");
  }
  const Matrix nb = b * inv;
  HeisPoint p;
  p.X = nb.rows_range(s.m, s.mid());
  p.Y = nb.rows_range(0, s.m) - kHalf * (p.X.adjoint() * p.X);
  return p;
}

ShilovPoint from_chart(const HermSpace& space, const HeisPoint& p) {
  require(p.X.rows() == space.mid() && p.X.cols() == space.m && p.Y.rows() == space.m,
          ErrorKind::DimensionMismatch, "chart point shape");
  require(is_anti_hermitian(p.Y), ErrorKind::NotAntiHermitian, "chart Y must be anti-Hermitian");
  return {space, vstack({p.Y + kHalf * (p.X.adjoint() * p.X), p.X, Matrix::identity(space.m)})};
}

HeisPoint act_N(const NElement& g, const HeisPoint& p) {
  return {g.E + p.X, g.F + p.Y + kHalf * (g.E.adjoint() * p.X - p.X.adjoint() * g.E)};
}

HeisPoint act_L(const LElement& g, const HeisPoint& p) {
  return {g.phase() * g.B * p.X * g.A.adjoint(), g.A * p.Y * g.A.adjoint()};
}

HeisPoint act_Q(const QElement& g, const HeisPoint& p) { return act_L(g.l, act_N(g.n, p)); }

WPoint project(const HeisPoint& p) { return {p.X}; }

Subspace w_to_subspace(const HermSpace& space, const WPoint& w) {
  require(w.A.rows() == space.mid() && w.A.cols() == space.m, ErrorKind::DimensionMismatch,
          "W point shape");
  const Matrix normal = vstack({w.A.adjoint(), Matrix::identity(space.mid()), Matrix(space.m, space.mid())});
  return orth_complement(Subspace(space, normal));
}

WPoint subspace_to_w(const Subspace& v) {
  const HermSpace& s = v.space();
  require(v.dim() == 2 * s.m, ErrorKind::NotChain, "W space must be 2m-dimensional");
  const Matrix perp = orth_complement(v).basis();
  require(perp.rows_range(s.n, s.m).is_zero(), ErrorKind::NotChain, "space does not contain v_inf");
  Matrix inv;
  try {
    inv = inverse(perp.rows_range(s.m, s.mid()));
  } catch (const GeometryError&) {
    fail(ErrorKind::NotChain, "space is not in the chart of W");
  }
  return {(perp.rows_range(0, s.m) * inv).adjoint()};
}

}  // namespace chaingeo
