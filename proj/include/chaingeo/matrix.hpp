#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "chaingeo/gaussian.hpp"

namespace chaingeo {

/// Dense row-major matrix over the Gaussian rationals.
///
/// Zero-sized dimensions are legal and show up naturally (e.g. the middle
/// block of C^{m+n} when n = m).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> data);
  /// Row-major literal, mostly for tests.
  Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const std::vector<GaussianRational>& d);
  /// Column vector with a single 1 at position `index`.
  static Matrix unit(std::size_t size, std::size_t index);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<GaussianRational>& data() const { return data_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conj() const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix col(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix cols_range(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }
  Matrix rows_range(std::size_t r0, std::size_t nr) const { return block(r0, 0, nr, cols_); }

  bool is_zero() const;
  GaussianRational trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const GaussianRational& s);
  Matrix operator-() const;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const GaussianRational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, const GaussianRational& s) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix vstack(std::initializer_list<Matrix> parts);
Matrix block_diagonal(std::initializer_list<Matrix> parts);

struct RowEchelon {
  Matrix reduced;                   ///< reduced row echelon form, leading entries 1
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination; the first nonzero entry of each column is the pivot.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Canonical basis of the column space: column-reduced echelon form with
/// leading entries 1, scanning rows top to bottom.
Matrix column_space(const Matrix& m);
/// Basis of the right kernel, as columns (possibly zero columns).
Matrix kernel(const Matrix& m);
/// Unique X with A X = B for A of full column rank; throws Inconsistent otherwise.
Matrix solve(const Matrix& a, const Matrix& b);
/// Some X with A X = B (free variables set to zero), or nullopt if none.
std::optional<Matrix> solve_any(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& a);
GaussianRational determinant(const Matrix& a);

bool is_hermitian(const Matrix& a);
bool is_anti_hermitian(const Matrix& a);
bool is_unitary(const Matrix& a);

struct Signature {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;

  long index() const { return static_cast<long>(plus) - static_cast<long>(minus); }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of v -> v* A v by symmetric elimination.
///
/// Diagonal pivots are taken greatest-|numerator| first (lowest index on
/// ties). When every remaining diagonal entry vanishes but the block does
/// not, the first nonzero off-diagonal pair forms a hyperbolic 2x2 pivot
/// contributing (+1, -1).
Signature hermitian_signature(const Matrix& a);

/// g = (I - K)(I + K)^{-1}, which satisfies g* H g = H whenever K*H + HK = 0.
Matrix cayley_h_unitary(const Matrix& k, const Matrix& h);

}  // namespace chaingeo
