#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chaingeo/hermitian.hpp"

namespace chaingeo {

/// An m-dimensional h-isotropic subspace.
class ShilovPoint {
 public:
  ShilovPoint() = default;
  /// Throws NotShilovPoint unless s is isotropic of dimension m.
  explicit ShilovPoint(const Subspace& s);
  ShilovPoint(const HermSpace& space, const Matrix& basis) : ShilovPoint(Subspace(space, basis)) {}

  const Subspace& subspace() const { return s_; }
  const Matrix& basis() const { return s_.basis(); }
  const HermSpace& space() const { return s_.space(); }

  friend bool operator==(const ShilovPoint& a, const ShilovPoint& b) { return a.s_ == b.s_; }

 private:
  Subspace s_;
};

/// An m-chain: a 2m-dimensional subspace on which h has signature (m,m).
///
/// A chain may carry a frame, two transverse points (x, y) on it. Chain
/// points transverse to y are exactly the spans of X + Y G^{-1} S with
/// G = X* h Y and S anti-Hermitian, which gives exact rational points even
/// for chains whose own canonical basis suggests none.
class MChain {
 public:
  MChain() = default;
  /// Throws NotChain unless h restricted to v has signature (m,m,0).
  explicit MChain(const Subspace& v);
  /// Throws NotChain unless x, y are transverse points of v.
  MChain(const Subspace& v, const ShilovPoint& x, const ShilovPoint& y);

  const Subspace& subspace() const { return v_; }
  const Matrix& basis() const { return v_.basis(); }
  const HermSpace& space() const { return v_.space(); }
  bool has_frame() const { return frame_.has_value(); }
  /// Throws NoRationalFrame when absent.
  const std::pair<ShilovPoint, ShilovPoint>& frame() const;

  /// The point spanned by X + Y G^{-1} S; throws NotAntiHermitian for bad S.
  ShilovPoint point(const Matrix& s) const;
  /// g applied to the chain and its frame; g must be h-unitary, which is
  /// not re-checked.
  MChain transformed(const Matrix& g) const;

  /// Equality of the underlying subspaces; frames are bookkeeping.
  friend bool operator==(const MChain& a, const MChain& b) { return a.v_ == b.v_; }

 private:
  friend MChain chain_through(const ShilovPoint& x, const ShilovPoint& y);
  struct Unchecked {};
  MChain(Unchecked, Subspace v, std::optional<std::pair<ShilovPoint, ShilovPoint>> frame)
      : v_(std::move(v)), frame_(std::move(frame)) {}

  Subspace v_;
  std::optional<std::pair<ShilovPoint, ShilovPoint>> frame_;
};

bool is_shilov_point(const Subspace& s);
ShilovPoint v_inf(const HermSpace& space);
ShilovPoint v_zero(const HermSpace& space);
/// Basis [I; 0; d] with d = diag(i * signs[j]); signs entries are +1 or -1.
ShilovPoint v_d(const HermSpace& space, const std::vector<int>& signs);
Matrix d_matrix(const std::vector<int>& signs);

bool transverse(const ShilovPoint& x, const ShilovPoint& y);
MChain chain_through(const ShilovPoint& x, const ShilovPoint& y);
bool member(const ShilovPoint& z, const MChain& t);
ShilovPoint transformed(const Matrix& g, const ShilovPoint& x);

/// dim <x,y,z> = 2m; throws NotTransverse unless pairwise transverse.
bool is_maximal_triple_space(const ShilovPoint& x, const ShilovPoint& y, const ShilovPoint& z);

/// Sign convention of the index; fixed so that m = 1 agrees with the
/// Cartan invariant (see docs/bergmann-calibration.md).
inline constexpr long kBergmannSign = -1;

/// Signature index of i F, where F(u,u') = <u, T u'> on x and y is the
/// graph of T: x -> z inside <x,z>. Throws NotTransverse, NotCoplanar.
long bergmann_index(const ShilovPoint& x, const ShilovPoint& y, const ShilovPoint& z);
/// Same without the calibration sign.
long bergmann_index_raw(const ShilovPoint& x, const ShilovPoint& y, const ShilovPoint& z);

/// (2/pi) arg(<x,y><y,z><z,x>) for m = 1. Throws DegeneratePairing.
double cartan_invariant(const ShilovPoint& x, const ShilovPoint& y, const ShilovPoint& z);

}  // namespace chaingeo
