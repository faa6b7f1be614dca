#include "peakdec/isotonic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace peakdec {

namespace {

struct Block {
  std::size_t first;
  std::size_t count;
  double sum;

  double mean() const { return sum / static_cast<double>(count); }
};

}  // namespace

std::vector<double> nonincreasing_lsq(std::span<const double> targets, OpCounters* counters) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!std::isfinite(targets[i]) || targets[i] < 0.0) {
      throw std::invalid_argument("isotonic target " + std::to_string(i) +
                                  " must be finite and nonnegative");
    }
  }

  std::vector<Block> stack;
  stack.reserve(targets.size());
  std::uint64_t merges = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    stack.push_back({i, 1, targets[i]});
    while (stack.size() > 1) {
      const Block& last = stack.back();
      const Block& prev = stack[stack.size() - 2];
      if (!(prev.mean() < last.mean())) break;
      Block merged{prev.first, prev.count + last.count, prev.sum + last.sum};
      stack.pop_back();
      stack.back() = merged;
      ++merges;
    }
  }
  if (counters) counters->isotonic_merges += merges;

  // Means are re-summed left to right per block rather than taken from the
  // pooled partial sums.
  std::vector<double> fit(targets.size());
  for (const Block& b : stack) {
    double sum = 0.0;
    for (std::size_t i = b.first; i < b.first + b.count; ++i) sum += targets[i];
    const double mean = sum / static_cast<double>(b.count);
    for (std::size_t i = b.first; i < b.first + b.count; ++i) fit[i] = mean;
  }
  return fit;
}

}  // namespace peakdec
