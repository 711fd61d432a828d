#pragma once

#include <vector>

#include "twonormal/bigint.hpp"

namespace twonormal {

// Extreme rays of { x >= 0, A x = 0, x[i] = 0 for i outside active }, as
// primitive integer vectors of full dimension, sorted lexicographically.
// Double description: start from the coordinate rays of the active orthant
// and slice one equation at a time, keeping adjacent positive/negative
// combinations.
std::vector<std::vector<BigInt>> extreme_rays(
    const std::vector<std::vector<int>>& rows, int cols,
    const std::vector<int>& active);

std::vector<std::vector<BigInt>> extreme_rays(
    const std::vector<std::vector<int>>& rows, int cols);

// Independent reference route: for every candidate support, solve the
// restricted system by exact rational elimination and keep one-dimensional
// kernels with a strictly signed generator.  Exponential in the dimension;
// meant for cross-checking small cases.
std::vector<std::vector<BigInt>> brute_force_rays(
    const std::vector<std::vector<int>>& rows, int cols,
    const std::vector<int>& active);

std::vector<std::vector<BigInt>> brute_force_rays(
    const std::vector<std::vector<int>>& rows, int cols);

}  // namespace twonormal
