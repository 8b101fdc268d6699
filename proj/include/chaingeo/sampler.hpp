#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "chaingeo/chains.hpp"
#include "chaingeo/rng.hpp"

namespace chaingeo {

struct SampleConfig {
  std::uint64_t seed = 1;
  long height = 10;  ///< bound on numerators and denominators of sampled rationals
  std::size_t m = 1;
  std::size_t n = 2;

  HermSpace space() const { return {m, n}; }
};

/// Seeded generator of exact test data. Identical construction arguments
/// give identical streams.
class Sampler {
 public:
  Sampler(const HermSpace& space, std::uint64_t seed, long height = 10, long group_height = 2);
  explicit Sampler(const SampleConfig& cfg) : Sampler(cfg.space(), cfg.seed, cfg.height) {}

  const HermSpace& space() const { return space_; }
  SplitMix64& rng() { return rng_; }

  Rational rational(long height);
  GaussianRational gaussian() { return gaussian(height_); }
  GaussianRational gaussian(long height);
  Matrix matrix(std::size_t rows, std::size_t cols) { return matrix(rows, cols, height_); }
  Matrix matrix(std::size_t rows, std::size_t cols, long height);
  Matrix anti_hermitian(std::size_t k) { return anti_hermitian(k, height_); }
  Matrix anti_hermitian(std::size_t k, long height);
  Matrix hermitian(std::size_t k, long height);
  Matrix invertible(std::size_t k, long height);
  /// Cayley transform of an anti-Hermitian matrix.
  Matrix unitary(std::size_t k);
  /// unitary(k) with its first column rescaled to make the determinant 1.
  Matrix special_unitary(std::size_t k);
  /// +-1 entries.
  std::vector<int> signs(std::size_t k);

  /// Exact g with g* h g = h, by Cayley transform with rejection.
  Matrix h_unitary();
  HeisPoint heis_point();
  /// A chart point; with include_vinf, v_inf itself one time in 16.
  ShilovPoint point(bool include_vinf = false);
  NElement n_element();
  LElement l_element();
  QElement q_element();
  /// q T_k for a random q fixing v_inf; index k at v_inf.
  MChain chain(std::size_t k);
  /// g (v_inf, v_0, v_d) for random g and d = +-i Id; the index is +-m.
  std::tuple<ShilovPoint, ShilovPoint, ShilovPoint> maximal_triple();
  /// Same with independent random signs in d.
  std::tuple<ShilovPoint, ShilovPoint, ShilovPoint> coplanar_triple();
  /// `count` distinct points g [I; 0; A_j] on one chain, A_j anti-Hermitian
  /// with pairwise invertible differences, so they are pairwise transverse.
  std::vector<ShilovPoint> coplanar_points(std::size_t count);
  /// A random k-dimensional subspace of C^dim, as a canonical basis.
  Matrix linear_subspace(std::size_t dim, std::size_t k);

 private:
  HermSpace space_;
  SplitMix64 rng_;
  long height_;
  long group_height_;
};

}  // namespace chaingeo
