#include "chaingeo/usubspace.hpp"

#include "chaingeo/error.hpp"

namespace chaingeo {

namespace {

Matrix reduce_rows(const Matrix& rows) {
  const RowEchelon e = rref(rows);
  return e.reduced.rows_range(0, e.pivots.size());
}

}  // namespace

std::vector<Matrix> u_basis(std::size_t m) {
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < m; ++j) {
    Matrix b(m, m);
    b(j, j) = GaussianRational::i();
    out.push_back(b);
  }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = j + 1; k < m; ++k) {
      Matrix a(m, m), b(m, m);
      a(j, k) = 1;
      a(k, j) = -1;
      b(j, k) = GaussianRational::i();
      b(k, j) = GaussianRational::i();
      out.push_back(a);
      out.push_back(b);
    }
  return out;
}

Matrix u_coordinates(const Matrix& f) {
  require(is_anti_hermitian(f), ErrorKind::NotAntiHermitian, "element of u(m) expected");
  const std::size_t m = f.rows();
  Matrix c(1, m * m);
  std::size_t t = 0;
  for (std::size_t j = 0; j < m; ++j) c(0, t++) = f(j, j).im();
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = j + 1; k < m; ++k) {
      c(0, t++) = f(j, k).re();
      c(0, t++) = f(j, k).im();
    }
  return c;
}

Matrix u_from_coordinates(std::size_t m, const Matrix& coords) {
  require(coords.rows() * coords.cols() == m * m, ErrorKind::DimensionMismatch, "need m^2 coordinates");
  const auto basis = u_basis(m);
  Matrix f(m, m);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    const GaussianRational& c = coords.data()[t];
    if (!c.is_zero()) f += c * basis[t];
  }
  return f;
}

Matrix realify(const Matrix& a) {
  Matrix r(2 * a.rows() * a.cols(), 1);
  std::size_t t = 0;
  for (const auto& x : a.data()) {
    r(t++, 0) = x.re();
    r(t++, 0) = x.im();
  }
  return r;
}

Matrix real_linear_map(std::size_t m, const std::function<Matrix(const Matrix&)>& op) {
  const auto basis = u_basis(m);
  Matrix out;
  for (std::size_t t = 0; t < basis.size(); ++t) {
    const Matrix col = realify(op(basis[t]));
    if (t == 0) out = Matrix(col.rows(), basis.size());
    out.set_block(0, t, col);
  }
  return out;
}

std::optional<Matrix> solve_u(std::size_t m, const std::function<Matrix(const Matrix&)>& op,
                              const Matrix& rhs) {
  const auto x = solve_any(real_linear_map(m, op), realify(rhs));
  if (!x) return std::nullopt;
  return u_from_coordinates(m, *x);
}

USubspace kernel_u(std::size_t m, const std::function<Matrix(const Matrix&)>& op) {
  const Matrix k = kernel(real_linear_map(m, op));
  std::vector<Matrix> gens;
  for (std::size_t c = 0; c < k.cols(); ++c) gens.push_back(u_from_coordinates(m, k.col(c)));
  return USubspace::span(m, gens);
}

USubspace::USubspace(std::size_t m) : m_(m), coords_(0, m * m) {}

USubspace USubspace::span(std::size_t m, const std::vector<Matrix>& generators) {
  USubspace s(m);
  if (generators.empty()) return s;
  Matrix rows(generators.size(), m * m);
  for (std::size_t t = 0; t < generators.size(); ++t) {
    require(generators[t].rows() == m, ErrorKind::DimensionMismatch, "generator size");
    rows.set_block(t, 0, u_coordinates(generators[t]));
  }
  s.coords_ = reduce_rows(rows);
  return s;
}

USubspace USubspace::full(std::size_t m) { return span(m, u_basis(m)); }

USubspace USubspace::top_left(std::size_t m, std::size_t k) {
  std::vector<Matrix> gens;
  for (const Matrix& b : u_basis(k)) {
    Matrix f(m, m);
    f.set_block(0, 0, b);
    gens.push_back(f);
  }
  return span(m, gens);
}

std::vector<Matrix> USubspace::basis() const {
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(u_from_coordinates(m_, coords_.rows_range(r, 1)));
  return out;
}

bool USubspace::contains(const Matrix& f) const {
  if (!is_anti_hermitian(f) || f.rows() != m_) return false;
  return rank(vstack(coords_, u_coordinates(f))) == dim();
}

bool USubspace::contains(const USubspace& other) const {
  return m_ == other.m_ && rank(vstack(coords_, other.coords_)) == dim();
}

USubspace USubspace::conjugated(const Matrix& a) const {
  std::vector<Matrix> gens;
  for (const Matrix& b : basis()) gens.push_back(a * b * a.adjoint());
  return span(m_, gens);
}

bool USubspace::orthogonal_to(const USubspace& other) const {
  const auto mine = basis();
  for (const Matrix& b : other.basis())
    for (const Matrix& a : mine)
      if (!(a.adjoint() * b).trace().is_zero()) return false;
  return true;
}

USubspace operator+(const USubspace& a, const USubspace& b) {
  require(a.m_ == b.m_, ErrorKind::DimensionMismatch, "u(m) sizes differ");
  USubspace s(a.m_);
  s.coords_ = reduce_rows(vstack(a.coords_, b.coords_));
  return s;
}

USubspace S_map(const Matrix& z1, const Matrix& z2) {
  require(z1.rows() == z2.rows(), ErrorKind::DimensionMismatch, "S map needs subspaces of one C^m");
  const std::size_t m = z1.rows();
  const GaussianRational i = GaussianRational::i();
  std::vector<Matrix> gens;
  for (std::size_t p = 0; p < z1.cols(); ++p)
    for (std::size_t q = 0; q < z2.cols(); ++q) {
      const Matrix u = z1.col(p), w = z2.col(q);
      const Matrix uw = u * w.adjoint(), wu = w * u.adjoint();
      gens.push_back(uw - wu);
      gens.push_back(i * (uw + wu));
    }
  return USubspace::span(m, gens);
}

}  // namespace chaingeo
