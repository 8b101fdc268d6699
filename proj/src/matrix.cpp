#include "chaingeo/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "chaingeo/error.hpp"

namespace chaingeo {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  require(data_.size() == rows * cols, ErrorKind::DimensionMismatch, "matrix data length mismatch");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, ErrorKind::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<GaussianRational>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::unit(std::size_t size, std::size_t index) {
  Matrix m(size, 1);
  m(index, 0) = 1;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::conj() const {
  Matrix r(*this);
  for (auto& x : r.data_) x = x.conj();
  return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, ErrorKind::DimensionMismatch, "block out of range");
  Matrix r(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, ErrorKind::DimensionMismatch,
          "set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& x) { return x.is_zero(); });
}

GaussianRational Matrix::trace() const {
  require(is_square(), ErrorKind::DimensionMismatch, "trace of non-square matrix");
  GaussianRational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::DimensionMismatch, "matrix sum shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::DimensionMismatch, "matrix difference shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const GaussianRational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix r(*this);
  for (auto& x : r.data_) x = -x;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, ErrorKind::DimensionMismatch, "matrix product shape");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const GaussianRational& bkj = b(k, j);
        if (!bkj.is_zero()) r(i, j).add_product(aik, bkj);
      }
    }
  }
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
  }
  os << "]";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorKind::DimensionMismatch, "hstack row mismatch");
  Matrix r(a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), ErrorKind::DimensionMismatch, "vstack column mismatch");
  Matrix r(a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

Matrix vstack(std::initializer_list<Matrix> parts) {
  Matrix r = *parts.begin();
  for (auto it = parts.begin() + 1; it != parts.end(); ++it) r = vstack(r, *it);
  return r;
}

Matrix block_diagonal(std::initializer_list<Matrix> parts) {
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows();
    cols += p.cols();
  }
  Matrix r(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& p : parts) {
    r.set_block(r0, c0, p);
    r0 += p.rows();
    c0 += p.cols();
  }
  return r;
}

RowEchelon rref(const Matrix& m) {
  RowEchelon out{m, {}};
  Matrix& a = out.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const GaussianRational inv = GaussianRational(1) / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const GaussianRational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j).sub_product(f, a(r, j));
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  // Row rank is cheaper to eliminate along the short side.
  return m.rows() < m.cols() ? rref(m.transpose()).pivots.size() : rref(m).pivots.size();
}

Matrix column_space(const Matrix& m) {
  const RowEchelon e = rref(m.transpose());
  return e.reduced.rows_range(0, e.pivots.size()).transpose();
}

Matrix kernel(const Matrix& m) {
  const RowEchelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(n, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free[f]);
  }
  return k;
}

Matrix solve(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorKind::DimensionMismatch, "solve shape");
  const RowEchelon e = rref(hstack(a, b));
  const std::size_t n = a.cols();
  std::size_t lead = 0;
  while (lead < e.pivots.size() && e.pivots[lead] < n) ++lead;
  if (lead != e.pivots.size()) fail(ErrorKind::Inconsistent, "linear system has no solution");
  if (lead != n) fail(ErrorKind::Singular, "linear system solution is not unique");
  return e.reduced.block(0, n, n, b.cols());
}

std::optional<Matrix> solve_any(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorKind::DimensionMismatch, "solve shape");
  const RowEchelon e = rref(hstack(a, b));
  const std::size_t n = a.cols();
  Matrix x(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
  }
  return x;
}

Matrix inverse(const Matrix& a) {
  require(a.is_square(), ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  const RowEchelon e = rref(hstack(a, Matrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    fail(ErrorKind::Singular, "matrix is singular");
  return e.reduced.block(0, n, n, n);
}

GaussianRational determinant(const Matrix& m) {
  require(m.is_square(), ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  GaussianRational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const GaussianRational inv = GaussianRational(1) / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const GaussianRational f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j).sub_product(f, a(c, j));
    }
  }
  return det;
}

bool is_hermitian(const Matrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (!(a(i, j) == a(j, i).conj())) return false;
  return true;
}

bool is_anti_hermitian(const Matrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (!(a(i, j) == -a(j, i).conj())) return false;
  return true;
}

bool is_unitary(const Matrix& a) {
  return a.is_square() && a.adjoint() * a == Matrix::identity(a.rows());
}

Signature hermitian_signature(const Matrix& a) {
  require(is_hermitian(a), ErrorKind::NotHermitian, "hermitian_signature needs A* = A");
  Matrix w = a;
  std::vector<std::size_t> active(a.rows());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  Signature sig;

  auto drop = [&active](std::size_t idx) {
    active.erase(std::find(active.begin(), active.end(), idx));
  };

  while (!active.empty()) {
    std::size_t pivot = active.size();
    mpz_class best = 0;
    for (std::size_t t = 0; t < active.size(); ++t) {
      const Rational& d = w(active[t], active[t]).re();
      if (sgn(d) == 0) continue;
      mpz_class mag = abs(d.get_num());
      if (pivot == active.size() || mag > best) {
        pivot = t;
        best = mag;
      }
    }

    if (pivot != active.size()) {
      const std::size_t p = active[pivot];
      const Rational d = w(p, p).re();
      (sgn(d) > 0 ? sig.plus : sig.minus) += 1;
      drop(p);
      for (std::size_t r : active) {
        if (w(r, p).is_zero()) continue;
        const GaussianRational f = w(r, p) / GaussianRational(d);
        for (std::size_t s : active)
          if (!w(p, s).is_zero()) w(r, s).sub_product(f, w(p, s));
      }
      continue;
    }

    // Every active diagonal entry is zero: look for a hyperbolic pair.
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t t = 0; t < active.size() && !found; ++t)
      for (std::size_t u = t + 1; u < active.size() && !found; ++u)
        if (!w(active[t], active[u]).is_zero()) {
          pi = active[t];
          pj = active[u];
          found = true;
        }
    if (!found) {
      sig.zero += active.size();
      break;
    }
    sig.plus += 1;
    sig.minus += 1;
    const GaussianRational a_ij = w(pi, pj);
    const GaussianRational inv_a = GaussianRational(1) / a_ij;
    const GaussianRational inv_abar = GaussianRational(1) / a_ij.conj();
    drop(pi);
    drop(pj);
    // W_rest -= B P^{-1} B*, with P^{-1} = [[0, 1/conj(a)], [1/a, 0]].
    std::vector<GaussianRational> left_i, left_j;
    for (std::size_t r : active) {
      left_i.push_back(w(r, pi) * inv_abar);
      left_j.push_back(w(r, pj) * inv_a);
    }
    for (std::size_t t = 0; t < active.size(); ++t) {
      const std::size_t r = active[t];
      for (std::size_t s : active) {
        GaussianRational delta = left_i[t] * w(pj, s) + left_j[t] * w(pi, s);
        if (!delta.is_zero()) w(r, s) -= delta;
      }
    }
  }
  return sig;
}

Matrix cayley_h_unitary(const Matrix& k, const Matrix& h) {
  require(k.is_square() && h.is_square() && k.rows() == h.rows(), ErrorKind::DimensionMismatch,
          "cayley shapes");
  const bool anti = h == Matrix::identity(h.rows()) ? is_anti_hermitian(k) : (k.adjoint() * h + h * k).is_zero();
  require(anti, ErrorKind::NotAntiHermitian,
          "cayley needs K*H + HK = 0");
  const Matrix id = Matrix::identity(k.rows());
  // Id - K and Id + K commute, so (Id - K)(Id + K)^{-1} is one solve.
  try {
    return solve(id + k, id - k);
  } catch (const GeometryError&) {
    fail(ErrorKind::SingularCayley, "Id + K is singular");
  }
}

}  // namespace chaingeo
