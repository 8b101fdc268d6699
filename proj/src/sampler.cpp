#include "chaingeo/sampler.hpp"

#include "chaingeo/error.hpp"

namespace chaingeo {

Sampler::Sampler(const HermSpace& space, std::uint64_t seed, long height, long group_height)
    : space_(space), rng_(seed), height_(height), group_height_(group_height) {
  require(height >= 1 && group_height >= 1, ErrorKind::PreconditionViolation, "height must be positive");
}

Rational Sampler::rational(long h) {
  const long num = rng_.range(-h, h);
  const long den = rng_.range(1, h);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

GaussianRational Sampler::gaussian(long h) {
  Rational re = rational(h);
  return {re, rational(h)};
}

Matrix Sampler::matrix(std::size_t rows, std::size_t cols, long h) {
  Matrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = gaussian(h);
  return a;
}

Matrix Sampler::anti_hermitian(std::size_t k, long h) {
  Matrix a(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    a(i, i) = GaussianRational(0, rational(h));
    for (std::size_t j = i + 1; j < k; ++j) {
      a(i, j) = gaussian(h);
      a(j, i) = -a(i, j).conj();
    }
  }
  return a;
}

Matrix Sampler::hermitian(std::size_t k, long h) {
  return GaussianRational::i() * anti_hermitian(k, h);
}

Matrix Sampler::invertible(std::size_t k, long h) {
  for (;;) {
    Matrix a = matrix(k, k, h);
    if (!determinant(a).is_zero()) return a;
  }
}

Matrix Sampler::unitary(std::size_t k) {
  // I + S is invertible for anti-Hermitian S.
  return cayley_h_unitary(anti_hermitian(k, group_height_), Matrix::identity(k));
}

Matrix Sampler::special_unitary(std::size_t k) {
  Matrix u = unitary(k);
  if (k == 0) return u;
  const GaussianRational det = determinant(u);
  for (std::size_t i = 0; i < k; ++i) u(i, 0) *= det.conj();
  return u;
}

std::vector<int> Sampler::signs(std::size_t k) {
  std::vector<int> s(k);
  for (auto& x : s) x = rng_.below(2) ? 1 : -1;
  return s;
}

Matrix Sampler::h_unitary() {
  for (int attempt = 0; attempt < 100; ++attempt) {
    // h^2 = Id, so h S is h-anti-Hermitian for anti-Hermitian S.
    const Matrix k = space_.apply_h(anti_hermitian(space_.dim(), group_height_));
    try {
      return cayley_h_unitary(k, space_.h());
    } catch (const GeometryError& e) {
      if (e.kind() != ErrorKind::SingularCayley) throw;
    }
  }
  fail(ErrorKind::SingularCayley, "h-unitary sampling rejected 100 times");
}

HeisPoint Sampler::heis_point() {
  return {matrix(space_.mid(), space_.m), anti_hermitian(space_.m)};
}

ShilovPoint Sampler::point(bool include_vinf) {
  if (include_vinf && rng_.below(16) == 0) return v_inf(space_);
  return from_chart(space_, heis_point());
}

NElement Sampler::n_element() {
  return {matrix(space_.mid(), space_.m, group_height_), anti_hermitian(space_.m, group_height_)};
}

LElement Sampler::l_element() {
  return {invertible(space_.m, group_height_), special_unitary(space_.mid())};
}

QElement Sampler::q_element() {
  LElement l = l_element();
  return {l, n_element()};
}

MChain Sampler::chain(std::size_t k) {
  return standard_chain(space_, k).transformed(q_element().matrix(space_));
}

std::tuple<ShilovPoint, ShilovPoint, ShilovPoint> Sampler::maximal_triple() {
  const std::vector<int> s(space_.m, rng_.below(2) ? 1 : -1);
  const Matrix g = h_unitary();
  return {transformed(g, v_inf(space_)), transformed(g, v_zero(space_)), transformed(g, v_d(space_, s))};
}

std::tuple<ShilovPoint, ShilovPoint, ShilovPoint> Sampler::coplanar_triple() {
  const std::vector<int> s = signs(space_.m);
  const Matrix g = h_unitary();
  return {transformed(g, v_inf(space_)), transformed(g, v_zero(space_)), transformed(g, v_d(space_, s))};
}

std::vector<ShilovPoint> Sampler::coplanar_points(std::size_t count) {
  const Matrix g = h_unitary();
  std::vector<Matrix> params;
  while (params.size() < count) {
    Matrix a = anti_hermitian(space_.m, 4);
    bool ok = true;
    for (const Matrix& b : params) ok = ok && !determinant(a - b).is_zero();
    if (ok) params.push_back(a);
  }
  std::vector<ShilovPoint> out;
  for (const Matrix& a : params) {
    Matrix b(space_.dim(), space_.m);
    b.set_block(0, 0, Matrix::identity(space_.m));
    b.set_block(space_.n, 0, a);
    out.push_back(transformed(g, ShilovPoint(space_, b)));
  }
  return out;
}

Matrix Sampler::linear_subspace(std::size_t dim, std::size_t k) {
  for (;;) {
    Matrix b = matrix(dim, k, 3);
    if (rank(b) == k) return column_space(b);
  }
}

}  // namespace chaingeo
