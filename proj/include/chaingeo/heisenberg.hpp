#pragma once

#include "chaingeo/shilov.hpp"

namespace chaingeo {

/// Chart coordinates of a point transverse to v_inf: basis [Y + X*X/2; X; I].
struct HeisPoint {
  Matrix X;  ///< (n-m) x m
  Matrix Y;  ///< m x m, anti-Hermitian

  friend bool operator==(const HeisPoint&, const HeisPoint&) = default;
};

/// Coordinate of a chain through v_inf.
struct WPoint {
  Matrix A;  ///< (n-m) x m

  friend bool operator==(const WPoint&, const WPoint&) = default;
};

struct NElement {
  Matrix E;  ///< (n-m) x m
  Matrix F;  ///< m x m, anti-Hermitian

  NElement() = default;
  /// Throws NotAntiHermitian for a bad F.
  NElement(Matrix e, Matrix f);
  static NElement identity(const HermSpace& space);
  /// Central element (0, F).
  static NElement central(const HermSpace& space, const Matrix& f);

  /// [[I, E*, F + E*E/2], [0, I, E], [0, 0, I]].
  Matrix matrix(const HermSpace& space) const;
  NElement inverse() const;
  friend NElement operator*(const NElement& a, const NElement& b);
  friend bool operator==(const NElement&, const NElement&) = default;
};

struct LElement {
  Matrix A;  ///< m x m invertible
  Matrix B;  ///< (n-m) x (n-m) unitary with det 1

  LElement() = default;
  /// Throws PreconditionViolation unless A is invertible and B is unitary with det 1.
  LElement(Matrix a, Matrix b);
  static LElement identity(const HermSpace& space);

  /// diag(A, conj(a)/a B, A^{-*}) with a = det A.
  Matrix matrix(const HermSpace& space) const;
  /// conj(a)/a.
  GaussianRational phase() const;
};

/// Element l * n of the stabilizer of v_inf.
struct QElement {
  LElement l;
  NElement n;

  Matrix matrix(const HermSpace& space) const { return l.matrix(space) * n.matrix(space); }
};

/// Throws NotTransverseToVinf.
HeisPoint to_chart(const ShilovPoint& x);
ShilovPoint from_chart(const HermSpace& space, const HeisPoint& p);
/// (E + X, F + Y + (E*X - X*E)/2).
HeisPoint act_N(const NElement& g, const HeisPoint& p);
/// (conj(a)/a B X A*, A Y A*).
HeisPoint act_L(const LElement& g, const HeisPoint& p);
HeisPoint act_Q(const QElement& g, const HeisPoint& p);
WPoint project(const HeisPoint& p);

/// [A*; I; 0]^perp, a 2m-space through v_inf of signature (m,m).
Subspace w_to_subspace(const HermSpace& space, const WPoint& w);
/// Inverse of w_to_subspace. Throws NotChain if v is not of that form.
WPoint subspace_to_w(const Subspace& v);

}  // namespace chaingeo
