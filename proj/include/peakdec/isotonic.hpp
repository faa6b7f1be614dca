#pragma once

#include <span>
#include <vector>

#include "peakdec/counters.hpp"

namespace peakdec {

/// Least-squares projection of `targets` onto nonincreasing sequences.
///
/// Pool-adjacent-violators over a block stack: each arriving value either
/// opens a new block or is pooled with its predecessors while their means
/// would increase. Every pool removes a block, so merges never exceed the
/// input length and the whole solve is O(n). Each output value is the plain
/// mean of the targets in its block; equal neighbours are left unpooled.
///
/// Targets must be finite and nonnegative (they are magnitudes); anything
/// else throws std::invalid_argument.
std::vector<double> nonincreasing_lsq(std::span<const double> targets, OpCounters* counters = nullptr);

}  // namespace peakdec
