#pragma once

#include <vector>

#include "chaingeo/shilov.hpp"

namespace chaingeo {

/// Smallest integer strictly greater than 1 + m/(n-m). Needs n > m.
std::size_t generic_intersection_length(const HermSpace& space);
/// max{2m - (n-m)(j-1), m} for j = 1..count.
std::vector<std::size_t> expected_intersection_dims(const HermSpace& space, std::size_t count);
/// dim of <z,x_1> cap ... cap <z,x_j> for j = 1..xs.size().
std::vector<std::size_t> generic_intersection_dims(const ShilovPoint& z, const std::vector<ShilovPoint>& xs);

/// The common point of the chains. Throws NoCommonPoint.
ShilovPoint intersect_chains(const std::vector<MChain>& ts);

/// dim <a,b,w> = 3m. Throws InvalidRegime if n < 2m.
bool triple_span_generic(const ShilovPoint& a, const ShilovPoint& b, const ShilovPoint& w);

}  // namespace chaingeo
