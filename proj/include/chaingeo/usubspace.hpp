#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "chaingeo/matrix.hpp"

namespace chaingeo {

/// Real linear subspace of u(m), the anti-Hermitian m x m matrices.
///
/// Elements are handled through m^2 real coordinates: Im A_jj for each j,
/// then Re A_jk, Im A_jk for each j < k. The basis is kept as the reduced
/// row echelon form of the coordinate rows, so equality is exact.
class USubspace {
 public:
  explicit USubspace(std::size_t m = 1);
  /// Real span; throws NotAntiHermitian for a bad generator.
  static USubspace span(std::size_t m, const std::vector<Matrix>& generators);
  static USubspace full(std::size_t m);
  /// Matrices supported in the top-left k x k block.
  static USubspace top_left(std::size_t m, std::size_t k);

  std::size_t m() const { return m_; }
  std::size_t dim() const { return coords_.rows(); }
  std::vector<Matrix> basis() const;
  const Matrix& coordinates() const { return coords_; }

  bool contains(const Matrix& f) const;
  bool contains(const USubspace& other) const;
  /// { a X a* : X in this }.
  USubspace conjugated(const Matrix& a) const;
  /// Every pair has tr(A* B) = 0.
  bool orthogonal_to(const USubspace& other) const;

  friend USubspace operator+(const USubspace& a, const USubspace& b);
  friend bool operator==(const USubspace& a, const USubspace& b) {
    return a.m_ == b.m_ && a.coords_ == b.coords_;
  }

 private:
  std::size_t m_;
  Matrix coords_;  // dim x m^2, real entries, reduced row echelon form
};

/// Standard real basis of u(m) in coordinate order.
std::vector<Matrix> u_basis(std::size_t m);
/// Row of m^2 real coordinates of an anti-Hermitian matrix.
Matrix u_coordinates(const Matrix& f);
Matrix u_from_coordinates(std::size_t m, const Matrix& coords);
/// Column of real and imaginary parts of every entry.
Matrix realify(const Matrix& a);

/// Real matrix of the real-linear map u(m) -> complex matrices, columns
/// indexed by u_basis(m).
Matrix real_linear_map(std::size_t m, const std::function<Matrix(const Matrix&)>& op);
/// Some F in u(m) with op(F) = rhs for a real-linear op; nullopt if none.
std::optional<Matrix> solve_u(std::size_t m, const std::function<Matrix(const Matrix&)>& op,
                              const Matrix& rhs);
/// Kernel of a real-linear op on u(m).
USubspace kernel_u(std::size_t m, const std::function<Matrix(const Matrix&)>& op);

/// Real span of z1 z2* - z2 z1* over z1 in Z1, z2 in Z2 (bases as columns).
USubspace S_map(const Matrix& z1, const Matrix& z2);

}  // namespace chaingeo
