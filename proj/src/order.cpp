#include "peakdec/order.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace peakdec {

IndexOrder build_index_order(std::size_t k_star, Direction b, std::size_t k_max) {
  if (k_star > k_max) {
    throw std::invalid_argument("center bin " + std::to_string(k_star) + " is outside [0, " +
                                std::to_string(k_max) + "]");
  }
  std::vector<std::size_t> seq;
  seq.reserve(k_max + 1);
  seq.push_back(k_star);

  const std::size_t below = k_star;          // bins available under k_star
  const std::size_t above = k_max - k_star;  // bins available over k_star
  const std::size_t first_side = b == Direction::Up ? above : below;
  const std::size_t second_side = b == Direction::Up ? below : above;
  const auto step = [&](std::size_t d, bool first) {
    const bool up = (b == Direction::Up) == first;
    return up ? k_star + d : k_star - d;
  };

  const std::size_t reach = std::max(below, above);
  for (std::size_t d = 1; d <= reach; ++d) {
    if (d <= first_side) seq.push_back(step(d, true));
    if (d <= second_side) seq.push_back(step(d, false));
  }
  return IndexOrder(std::move(seq), k_star, b, k_max);
}

}  // namespace peakdec
