#include "chaingeo/shilov.hpp"

#include <cmath>
#include <numbers>

#include "chaingeo/error.hpp"

namespace chaingeo {

namespace {

bool isotropic(const Subspace& s) { return restrict_form(s).is_zero(); }

}  // namespace

ShilovPoint::ShilovPoint(const Subspace& s) : s_(s) {
  require(s.dim() == s.space().m && isotropic(s), ErrorKind::NotShilovPoint,
          "not an isotropic m-subspace");
}

MChain::MChain(const Subspace& v) : v_(v) {
  const std::size_t m = v.space().m;
  require(v.dim() == 2 * m && hermitian_signature(restrict_form(v)) == Signature{m, m, 0},
          ErrorKind::NotChain, "not a 2m-subspace of signature (m,m)");
}

MChain::MChain(const Subspace& v, const ShilovPoint& x, const ShilovPoint& y) : MChain(v) {
  require(v.contains(x.subspace()) && v.contains(y.subspace()) && transverse(x, y),
          ErrorKind::NotChain, "frame points must be transverse points of the chain");
  frame_.emplace(x, y);
}

const std::pair<ShilovPoint, ShilovPoint>& MChain::frame() const {
  if (!frame_) fail(ErrorKind::NoRationalFrame, "chain carries no frame");
  return *frame_;
}

ShilovPoint MChain::point(const Matrix& s) const {
  require(is_anti_hermitian(s) && s.rows() == space().m, ErrorKind::NotAntiHermitian,
          "chain point parameter must be anti-Hermitian m x m");
  const auto& [x, y] = frame();
  const Matrix g = x.basis().adjoint() * space().apply_h(y.basis());
  return {space(), x.basis() + y.basis() * solve(g, s)};
}

MChain MChain::transformed(const Matrix& g) const {
  require(g.is_square() && g.rows() == space().dim(), ErrorKind::DimensionMismatch, "transformation shape");
  std::optional<std::pair<ShilovPoint, ShilovPoint>> frame;
  if (frame_) frame.emplace(chaingeo::transformed(g, frame_->first), chaingeo::transformed(g, frame_->second));
  return MChain(Unchecked{}, apply(g, v_), std::move(frame));
}

bool is_shilov_point(const Subspace& s) { return s.dim() == s.space().m && isotropic(s); }

ShilovPoint v_inf(const HermSpace& space) {
  return {space, Matrix::identity(space.dim()).cols_range(0, space.m)};
}

ShilovPoint v_zero(const HermSpace& space) {
  return {space, Matrix::identity(space.dim()).cols_range(space.n, space.m)};
}

Matrix d_matrix(const std::vector<int>& signs) {
  Matrix d(signs.size(), signs.size());
  for (std::size_t j = 0; j < signs.size(); ++j) {
    require(signs[j] == 1 || signs[j] == -1, ErrorKind::PreconditionViolation, "signs must be +-1");
    d(j, j) = GaussianRational(0, signs[j]);
  }
  return d;
}

ShilovPoint v_d(const HermSpace& space, const std::vector<int>& signs) {
  require(signs.size() == space.m, ErrorKind::DimensionMismatch, "need m signs");
  Matrix b(space.dim(), space.m);
  b.set_block(0, 0, Matrix::identity(space.m));
  b.set_block(space.n, 0, d_matrix(signs));
  return {space, b};
}

bool transverse(const ShilovPoint& x, const ShilovPoint& y) {
  require(x.space() == y.space(), ErrorKind::DimensionMismatch, "points of different spaces");
  return rank(hstack(x.basis(), y.basis())) == 2 * x.space().m;
}

MChain chain_through(const ShilovPoint& x, const ShilovPoint& y) {
  require(transverse(x, y), ErrorKind::NotTransverse, "chain_through needs transverse points");
  // Two transverse isotropic m-spaces always span a subspace of signature (m,m).
  return MChain(MChain::Unchecked{}, span(x.subspace(), y.subspace()), std::pair{x, y});
}

bool member(const ShilovPoint& z, const MChain& t) { return t.subspace().contains(z.subspace()); }

ShilovPoint transformed(const Matrix& g, const ShilovPoint& x) {
  return ShilovPoint(apply(g, x.subspace()));
}

bool is_maximal_triple_space(const ShilovPoint& x, const ShilovPoint& y, const ShilovPoint& z) {
  require(transverse(x, y) && transverse(y, z) && transverse(x, z), ErrorKind::NotTransverse,
          "triple must be pairwise transverse");
  return rank(hstack(hstack(x.basis(), y.basis()), z.basis())) == 2 * x.space().m;
}

long bergmann_index_raw(const ShilovPoint& x, const ShilovPoint& y, const ShilovPoint& z) {
  if (!is_maximal_triple_space(x, y, z)) fail(ErrorKind::NotCoplanar, "triple spans more than 2m");
  const HermSpace& space = x.space();
  const std::size_t m = space.m;
  // y = x P + z Q; P and Q are invertible by transversality.
  const Matrix pq = solve(hstack(x.basis(), z.basis()), y.basis());
  const Matrix r = pq.rows_range(m, m) * inverse(pq.rows_range(0, m));
  const Matrix f = x.basis().adjoint() * space.apply_h(z.basis()) * r;
  require(is_anti_hermitian(f), ErrorKind::NotAntiHermitian, "graph form must be anti-Hermitian");
  return hermitian_signature(GaussianRational::i() * f).index();
}

long bergmann_index(const ShilovPoint& x, const ShilovPoint& y, const ShilovPoint& z) {
  return kBergmannSign * bergmann_index_raw(x, y, z);
}

double cartan_invariant(const ShilovPoint& x, const ShilovPoint& y, const ShilovPoint& z) {
  require(x.space().m == 1, ErrorKind::InvalidRegime, "Cartan invariant needs m = 1");
  const HermSpace& s = x.space();
  const GaussianRational xy = pairing(s, x.basis(), y.basis());
  const GaussianRational yz = pairing(s, y.basis(), z.basis());
  const GaussianRational zx = pairing(s, z.basis(), x.basis());
  if (xy.is_zero() || yz.is_zero() || zx.is_zero())
    fail(ErrorKind::DegeneratePairing, "points are not pairwise transverse");
  return 2.0 / std::numbers::pi * std::arg((xy * yz * zx).to_complex());
}

}  // namespace chaingeo
