#pragma once

#include <optional>

#include "chaingeo/heisenberg.hpp"
#include "chaingeo/usubspace.hpp"

namespace chaingeo {

/// Smallest k for which the standard chain T_k exists: max(0, 2m - n).
std::size_t min_vertical_index(const HermSpace& space);

/// T_k = <e_i (i <= k), e_j + e_{m+j-k} + e_{n+j} (k < j <= m), v_0>,
/// framed by v_0 and a rational point of T_k in the chart.
/// Throws PreconditionViolation unless min_vertical_index <= k <= m.
MChain standard_chain(const HermSpace& space, std::size_t k);

/// dim(x cap V_T).
std::size_t intersection_index(const ShilovPoint& x, const MChain& t);

/// The point of T_k with basis
///   [E*E/2 + C, E*U; E, I + U], [E, I + U; 0, 0], I
/// (top, middle, bottom blocks), for U unitary and C anti-Hermitian.
ShilovPoint parametrize_Tk(const HermSpace& space, std::size_t k, const Matrix& e, const Matrix& u,
                           const Matrix& c);

struct TkParameters {
  Matrix E;  ///< (m-k) x k
  Matrix U;  ///< (m-k) x (m-k) unitary
  Matrix C;  ///< k x k anti-Hermitian
};
/// Inverse of parametrize_Tk for a chart point of T_k.
TkParameters tk_parameters(const ShilovPoint& x, std::size_t k);

/// Matrix of the central element (0, F): [[I, 0, F], [0, I, 0], [0, 0, I]].
Matrix central_matrix(const HermSpace& space, const Matrix& f);
/// Some F in u(m) with (0,F) v1 contained in v2, if any.
std::optional<Matrix> central_translation(const Subspace& v1, const Subspace& v2);

/// Projection to W_{v_inf} of a chain with index k < m, stored as the
/// M-orbit of a witness chain with a marked point at Y = 0.
struct Circle {
  std::size_t k = 0;
  MChain witness;
  HeisPoint marked;
};

/// Throws VerticalChain if the chain passes through v_inf's full fiber
/// (index m), NotTransverseToVinf if no frame point is in the chart.
Circle project_chain(const MChain& t);
bool circle_equal(const Circle& a, const Circle& b);
/// The unique chain through t projecting onto c. Throws NotOnCircle.
MChain lift_circle(const Circle& c, const ShilovPoint& t);

/// Central stabilizer of T: span{z B z* : B in u(k)} with z a basis of v_inf cap V_T.
USubspace chain_stabilizer_M(const MChain& t);
/// Same, by solving (0,F) V_T = V_T directly.
USubspace chain_stabilizer_M_by_solving(const MChain& t);

/// Element of the stabilizer of (v_inf, v_0, T_k):
/// diag(A, mu diag(C11, C22), A^{-*}) with A = [Y, X; 0, mu C11] and
/// mu = conj(y)/y, y = det Y. C11, C22 unitary of sizes m-k and n-2m+k.
Matrix s0_element(const HermSpace& space, std::size_t k, const Matrix& y, const Matrix& x,
                  const Matrix& c11, const Matrix& c22);

/// M in Id + U(l), i.e. M - Id unitary.
bool in_id_plus_unitary(const Matrix& m);

/// Columns of the top block of (v_inf cap V), as a basis of a subspace of C^m.
Matrix vinf_trace(const Subspace& v);

}  // namespace chaingeo
