#include "chaingeo/beta.hpp"

#include "chaingeo/error.hpp"
#include "chaingeo/rng.hpp"

namespace chaingeo {

namespace {

const GaussianRational kHalf(Rational(1, 2));

std::vector<int> all_plus(std::size_t m) { return std::vector<int>(m, 1); }

Matrix trace_of_span(const ShilovPoint& a, const ShilovPoint& w) {
  return vinf_trace(span(a.subspace(), w.subspace()));
}

Matrix random_small(SplitMix64& rng, std::size_t r, std::size_t c, long h) {
  Matrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = GaussianRational(rng.range(-h, h), rng.range(-h, h));
  return a;
}

// Real-linear solutions G of G* M + M* G = 0, for complex k x k G.
std::vector<Matrix> anti_hermitian_twists(const Matrix& mat) {
  const std::size_t k = mat.rows();
  const std::size_t unknowns = 2 * k * k;
  Matrix sys;
  for (std::size_t t = 0; t < unknowns; ++t) {
    Matrix g(k, k);
    const std::size_t entry = t / 2;
    g(entry / k, entry % k) = t % 2 == 0 ? GaussianRational(1) : GaussianRational::i();
    const Matrix a = g.adjoint() * mat;
    const Matrix col = realify(a + a.adjoint());
    if (t == 0) sys = Matrix(col.rows(), unknowns);
    sys.set_block(0, t, col);
  }
  const Matrix ker = kernel(sys);
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Matrix g(k, k);
    for (std::size_t entry = 0; entry < k * k; ++entry)
      g(entry / k, entry % k) = GaussianRational(ker(2 * entry, c).re(), ker(2 * entry + 1, c).re());
    out.push_back(g);
  }
  return out;
}

// z with beta(z) = (V0 G0, V1 G1) given G1* (V1* d V0) G0 anti-Hermitian.
std::optional<ShilovPoint> assemble(const BetaFrame& f, const Matrix& v0, const Matrix& v1,
                                    const Matrix& g0, const Matrix& g1) {
  const HermSpace& s = f.space;
  const std::size_t k = f.k();
  const Matrix d = f.d();
  const Matrix p = v0 * g0;
  const Matrix kmat = -(d * (v1 * g1 - p));
  if (rank(kmat) != k) return std::nullopt;
  const Matrix x = kernel(kmat.adjoint()).adjoint();
  const Matrix kd = kmat * inverse(kmat.adjoint() * kmat);
  const Matrix y = p * kd.adjoint() - kd * p.adjoint() + kd * (p.adjoint() * kmat) * kd.adjoint();
  if (!is_anti_hermitian(y)) return std::nullopt;
  ShilovPoint z = from_chart(s, HeisPoint{x, y});
  if (!in_domain(f, z)) return std::nullopt;
  return z;
}

}  // namespace

BetaFrame::BetaFrame(const HermSpace& s, std::vector<int> sg) : space(s), signs(std::move(sg)) {
  require(s.n < 2 * s.m, ErrorKind::InvalidRegime, "beta needs n < 2m");
  require(signs.size() == s.m, ErrorKind::DimensionMismatch, "need m signs");
}

BetaFrame::BetaFrame(const HermSpace& s) : BetaFrame(s, all_plus(s.m)) {}

bool in_domain(const BetaFrame& f, const ShilovPoint& w) {
  const ShilovPoint v0 = f.v0(), vd = f.vd();
  return transverse(w, v0) && transverse(w, vd) &&
         rank(hstack(hstack(w.basis(), v0.basis()), vd.basis())) == f.space.dim();
}

std::pair<Matrix, Matrix> beta(const BetaFrame& f, const ShilovPoint& w) {
  if (!in_domain(f, w)) fail(ErrorKind::NotInDomain, "point is not in the domain of beta");
  return {trace_of_span(f.v0(), w), trace_of_span(f.vd(), w)};
}

USubspace error_space(const BetaFrame& f, const ShilovPoint& w) {
  const auto [b0, bd] = beta(f, w);
  return S_map(b0, b0) + S_map(bd, bd);
}

USubspace info_space(const BetaFrame& f, const ShilovPoint& w) {
  const auto [b0, bd] = beta(f, w);
  return S_map(kernel(b0.adjoint()), kernel(bd.adjoint()));
}

ShilovPoint beta_preimage(const BetaFrame& f, const Matrix& v0_in, const Matrix& v1_in, std::uint64_t seed) {
  const std::size_t m = f.space.m, k = f.k();
  require(v0_in.rows() == m && v1_in.rows() == m, ErrorKind::DimensionMismatch, "subspaces of C^m expected");
  const Matrix v0 = column_space(v0_in), v1 = column_space(v1_in);
  require(v0.cols() == k && v1.cols() == k, ErrorKind::DimensionMismatch, "subspaces must have dim 2m-n");
  const Matrix d = f.d();
  SplitMix64 rng(seed);

  for (int attempt = 0; attempt < 64; ++attempt) {
    const Matrix g0 = attempt < 8 ? Matrix::identity(k) : random_small(rng, k, k, 2);
    if (determinant(g0).is_zero()) continue;
    const Matrix m10 = v1.adjoint() * d * v0 * g0;
    if (!determinant(m10).is_zero() && attempt < 8) {
      // G1 = -M^{-*} (i t Id) makes G1* M = i t Id.
      const Matrix j = GaussianRational(0, attempt + 1) * Matrix::identity(k);
      const Matrix g1 = -(inverse(m10).adjoint() * j);
      if (auto z = assemble(f, v0, v1, g0, g1)) return *z;
      continue;
    }
    const auto twists = anti_hermitian_twists(m10);
    if (twists.empty()) continue;
    Matrix g1(k, k);
    for (const Matrix& t : twists) g1 += GaussianRational(rng.range(-3, 3)) * t;
    if (determinant(g1).is_zero()) continue;
    if (auto z = assemble(f, v0, v1, g0, g1)) return *z;
  }
  fail(ErrorKind::NoPreimageFound, "no preimage found for the given pair");
}

bool pair_in_image(const Matrix& a0, const Matrix& a1) {
  if (a0.rows() != a1.rows() || a0.cols() != a1.cols()) return false;
  const std::size_t l = a0.rows();
  if (rank(a0) != std::min(l, a0.cols()) || rank(a1) != std::min(l, a1.cols())) return false;
  return is_unitary(a1 * a0.adjoint() - Matrix::identity(l));
}

Subspace w_chart_at(const BetaFrame& f, WBase base, const Matrix& a) {
  const HermSpace& s = f.space;
  require(a.rows() == s.mid() && a.cols() == s.m, ErrorKind::DimensionMismatch, "W chart shape");
  const Matrix top = base == WBase::V0 ? Matrix(s.m, s.mid()) : a.adjoint();
  const Matrix bottom = base == WBase::V0 ? a.adjoint() : f.d() * a.adjoint();
  return orth_complement(Subspace(s, vstack({top, Matrix::identity(s.mid()), bottom})));
}

Matrix w_chart_coordinates(const BetaFrame& f, WBase base, const Subspace& v) {
  const HermSpace& s = f.space;
  require(v.dim() == 2 * s.m, ErrorKind::NotChain, "chain spaces are 2m-dimensional");
  const Matrix perp = orth_complement(v).basis();
  Matrix inv;
  try {
    inv = inverse(perp.rows_range(s.m, s.mid()));
  } catch (const GeometryError&) {
    fail(ErrorKind::NotChain, "space is outside the W chart");
  }
  const Matrix nb = perp * inv;
  const Matrix a = (base == WBase::V0 ? nb.rows_range(s.n, s.m) : nb.rows_range(0, s.m)).adjoint();
  require(w_chart_at(f, base, a) == v, ErrorKind::NotChain, "space is outside the W chart");
  return a;
}

}  // namespace chaingeo
