#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chaingeo/matrix.hpp"

namespace chaingeo {

/// C^{m+n} with the form h = [[0,0,I_m],[0,-I_{n-m},0],[I_m,0,0]].
///
/// Coordinates split into blocks of sizes m, n-m, m.
struct HermSpace {
  std::size_t m = 1;
  std::size_t n = 1;

  HermSpace() = default;
  /// Throws InvalidRegime unless 1 <= m <= n.
  HermSpace(std::size_t m, std::size_t n);

  std::size_t dim() const { return m + n; }
  std::size_t mid() const { return n - m; }
  Matrix h() const;
  /// h * B without forming h.
  Matrix apply_h(const Matrix& b) const;

  friend bool operator==(const HermSpace&, const HermSpace&) = default;
};

/// Linear subspace of C^{m+n}, stored by its canonical basis.
class Subspace {
 public:
  Subspace() = default;
  /// Any spanning set is accepted; the basis is canonicalized.
  Subspace(const HermSpace& space, const Matrix& spanning);

  const HermSpace& space() const { return space_; }
  const Matrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.cols(); }

  bool contains(const Matrix& vectors) const;
  bool contains(const Subspace& other) const { return contains(other.basis_); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.space_ == b.space_ && a.basis_ == b.basis_;
  }

 private:
  HermSpace space_;
  Matrix basis_;
};

/// u* h v.
GaussianRational pairing(const HermSpace& space, const Matrix& u, const Matrix& v);
/// Gram matrix B* h B of the canonical basis.
Matrix restrict_form(const Subspace& s);
Subspace orth_complement(const Subspace& s);
Subspace span(const Subspace& a, const Subspace& b);
Subspace span(const std::vector<Subspace>& parts);
Subspace intersect(const Subspace& a, const Subspace& b);
/// g(S) for an invertible g.
Subspace apply(const Matrix& g, const Subspace& s);

}  // namespace chaingeo
