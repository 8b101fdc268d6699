#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chaingeo/chains.hpp"

namespace chaingeo {

/// The pair of base points v_0, v_d for n < 2m, with d = diag(i * signs).
struct BetaFrame {
  HermSpace space;
  std::vector<int> signs;

  /// Throws InvalidRegime unless n < 2m.
  BetaFrame(const HermSpace& space, std::vector<int> signs);
  /// d = i Id.
  explicit BetaFrame(const HermSpace& space);

  std::size_t k() const { return 2 * space.m - space.n; }
  std::size_t l() const { return space.mid(); }
  Matrix d() const { return d_matrix(signs); }
  ShilovPoint v0() const { return v_zero(space); }
  ShilovPoint vd() const { return v_d(space, signs); }
};

/// Transverse to v_0 and v_d, and spanning C^{m+n} together with them.
bool in_domain(const BetaFrame& f, const ShilovPoint& w);

/// (<v_0,w> cap v_inf, <v_d,w> cap v_inf) as bases of subspaces of C^m.
/// Throws NotInDomain.
std::pair<Matrix, Matrix> beta(const BetaFrame& f, const ShilovPoint& w);
/// S(b0, b0) + S(bd, bd).
USubspace error_space(const BetaFrame& f, const ShilovPoint& w);
/// S(b0^perp, bd^perp), complements for the standard form on C^m.
USubspace info_space(const BetaFrame& f, const ShilovPoint& w);

/// A point w of the domain with beta(w) = (V0, V1), built exactly in the
/// chart of v_inf. `seed` drives the choice among the solutions.
/// Throws DimensionMismatch, NoPreimageFound.
ShilovPoint beta_preimage(const BetaFrame& f, const Matrix& v0, const Matrix& v1,
                          std::uint64_t seed = 0);

/// Maximal ranks and A1 A0* - Id unitary.
bool pair_in_image(const Matrix& a0, const Matrix& a1);

enum class WBase { V0, Vd };
/// [0; I; A*]^perp at v_0, [A*; I; d A*]^perp at v_d.
Subspace w_chart_at(const BetaFrame& f, WBase base, const Matrix& a);
/// Inverse of w_chart_at. Throws NotChain.
Matrix w_chart_coordinates(const BetaFrame& f, WBase base, const Subspace& v);

}  // namespace chaingeo
