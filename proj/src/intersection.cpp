#include "chaingeo/intersection.hpp"

#include <algorithm>

#include "chaingeo/error.hpp"

namespace chaingeo {

std::size_t generic_intersection_length(const HermSpace& s) {
  require(s.n > s.m, ErrorKind::InvalidRegime, "generic intersections need n > m");
  return 2 + s.m / s.mid();
}

std::vector<std::size_t> expected_intersection_dims(const HermSpace& s, std::size_t count) {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j <= count; ++j) {
    const std::size_t drop = s.mid() * (j - 1);
    out.push_back(drop >= s.m ? s.m : 2 * s.m - drop);
  }
  return out;
}

std::vector<std::size_t> generic_intersection_dims(const ShilovPoint& z, const std::vector<ShilovPoint>& xs) {
  std::vector<std::size_t> out;
  std::optional<Subspace> acc;
  for (const ShilovPoint& x : xs) {
    const Subspace sp = span(z.subspace(), x.subspace());
    acc = acc ? intersect(*acc, sp) : sp;
    out.push_back(acc->dim());
  }
  return out;
}

ShilovPoint intersect_chains(const std::vector<MChain>& ts) {
  if (ts.empty()) fail(ErrorKind::NoCommonPoint, "no chains given");
  Subspace acc = ts.front().subspace();
  for (std::size_t i = 1; i < ts.size(); ++i) acc = intersect(acc, ts[i].subspace());
  if (!is_shilov_point(acc)) fail(ErrorKind::NoCommonPoint, "chains do not meet in a single point");
  return ShilovPoint(acc);
}

bool triple_span_generic(const ShilovPoint& a, const ShilovPoint& b, const ShilovPoint& w) {
  const HermSpace& s = a.space();
  require(s.n >= 2 * s.m, ErrorKind::InvalidRegime, "needs n >= 2m");
  return span({a.subspace(), b.subspace(), w.subspace()}).dim() == 3 * s.m;
}

}  // namespace chaingeo
