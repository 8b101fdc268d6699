#include "chaingeo/hermitian.hpp"

#include "chaingeo/error.hpp"

namespace chaingeo {

HermSpace::HermSpace(std::size_t m_, std::size_t n_) : m(m_), n(n_) {
  require(m >= 1 && m <= n, ErrorKind::InvalidRegime, "need 1 <= m <= n");
}

Matrix HermSpace::h() const { return apply_h(Matrix::identity(dim())); }

Matrix HermSpace::apply_h(const Matrix& b) const {
  require(b.rows() == dim(), ErrorKind::DimensionMismatch, "vector length must be m+n");
  Matrix r(b.rows(), b.cols());
  r.set_block(0, 0, b.rows_range(n, m));
  r.set_block(m, 0, -b.rows_range(m, mid()));
  r.set_block(n, 0, b.rows_range(0, m));
  return r;
}

Subspace::Subspace(const HermSpace& space, const Matrix& spanning) : space_(space) {
  require(spanning.rows() == space.dim(), ErrorKind::DimensionMismatch, "basis must have m+n rows");
  basis_ = column_space(spanning);
}

bool Subspace::contains(const Matrix& vectors) const {
  require(vectors.rows() == space_.dim(), ErrorKind::DimensionMismatch, "vector length must be m+n");
  return rank(hstack(basis_, vectors)) == dim();
}

GaussianRational pairing(const HermSpace& space, const Matrix& u, const Matrix& v) {
  require(u.cols() == 1 && v.cols() == 1, ErrorKind::DimensionMismatch, "pairing takes vectors");
  return (u.adjoint() * space.apply_h(v))(0, 0);
}

Matrix restrict_form(const Subspace& s) {
  return s.basis().adjoint() * s.space().apply_h(s.basis());
}

Subspace orth_complement(const Subspace& s) {
  return {s.space(), kernel(s.space().apply_h(s.basis()).adjoint())};
}

Subspace span(const Subspace& a, const Subspace& b) {
  require(a.space() == b.space(), ErrorKind::DimensionMismatch, "subspaces of different spaces");
  return {a.space(), hstack(a.basis(), b.basis())};
}

Subspace span(const std::vector<Subspace>& parts) {
  require(!parts.empty(), ErrorKind::DimensionMismatch, "span of nothing");
  Matrix all = parts.front().basis();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    require(parts[i].space() == parts.front().space(), ErrorKind::DimensionMismatch,
            "subspaces of different spaces");
    all = hstack(all, parts[i].basis());
  }
  return {parts.front().space(), all};
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require(a.space() == b.space(), ErrorKind::DimensionMismatch, "subspaces of different spaces");
  const Matrix coeffs = kernel(hstack(a.basis(), b.basis()));
  return {a.space(), a.basis() * coeffs.rows_range(0, a.dim())};
}

Subspace apply(const Matrix& g, const Subspace& s) { return {s.space(), g * s.basis()}; }

}  // namespace chaingeo
