#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace peakdec {

/// Which neighbour of the center ranks second in the monotone chain:
/// Up puts k*+1 before k*-1, Down the reverse.
enum class Direction : int { Up = 1, Down = -1 };

constexpr int sign(Direction b) { return static_cast<int>(b); }
constexpr Direction opposite(Direction b) { return b == Direction::Up ? Direction::Down : Direction::Up; }

/// Permutation of 0..K along which a pseudo-symmetric peak's magnitudes must
/// not increase. Only build_index_order creates these.
class IndexOrder {
 public:
  std::span<const std::size_t> sequence() const { return sequence_; }
  std::size_t operator[](std::size_t m) const { return sequence_[m]; }
  std::size_t size() const { return sequence_.size(); }
  std::size_t k_star() const { return k_star_; }
  Direction direction() const { return direction_; }
  std::size_t k_max() const { return k_max_; }

 private:
  friend IndexOrder build_index_order(std::size_t, Direction, std::size_t);
  IndexOrder(std::vector<std::size_t> seq, std::size_t k_star, Direction b, std::size_t k_max)
      : sequence_(std::move(seq)), k_star_(k_star), direction_(b), k_max_(k_max) {}

  std::vector<std::size_t> sequence_;
  std::size_t k_star_;
  Direction direction_;
  std::size_t k_max_;
};

/// Interleaves bins at growing distance from k_star, side b first at each
/// distance. Once one end of the spectrum is used up the remaining bins
/// follow in order on the other side, so every prefix is a contiguous
/// interval around k_star. Throws std::invalid_argument if k_star > k_max.
IndexOrder build_index_order(std::size_t k_star, Direction b, std::size_t k_max);

}  // namespace peakdec
