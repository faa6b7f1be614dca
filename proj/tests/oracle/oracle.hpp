#pragma once

// Deliberately naive reference implementations. Nothing here calls into the
// ordering, isotonic, fitting or detection code it is used to check.

#include <cstddef>
#include <span>
#include <vector>

#include "peakdec/signal.hpp"

namespace peakdec::oracle {

inline constexpr std::size_t kExhaustiveIsotonicCap = 12;
inline constexpr std::size_t kScanIsotonicCap = 4096;
inline constexpr std::size_t kDftCap = 4096;
inline constexpr std::size_t kJointMinCap = 64;

/// Tries every split into consecutive blocks (2^(n-1) of them).
std::vector<double> isotonic_exhaustive(std::span<const double> targets);

/// Pool-adjacent-violators that rescans from the front after every merge.
std::vector<double> isotonic_scan(std::span<const double> targets);

/// Exhaustive search up to 12 values, the rescanning PAVA up to 4096.
std::vector<double> oracle_isotonic(std::span<const double> targets);

/// Direct O(N^2) DFT, bins 0..floor(N/2).
Spectrum oracle_dft(const TimeSeries& ts);

/// Interleaved order built by sorting bins on (distance to k_star, b side
/// first) rather than by walking outward.
std::vector<std::size_t> sorted_index_order(std::size_t k_star, int b, std::size_t k_max);

struct JointMin {
  std::size_t k_star = 0;
  int b = 1;
  double error = 0.0;
};

/// Minimum fit error over every (k*, b), smaller k* then b = +1 on ties.
JointMin oracle_joint_min(const Spectrum& w);

/// Error of the best magnitude-only pseudo-symmetric fit for one (k*, b).
double oracle_fit_error(const Spectrum& w, std::size_t k_star, int b);

}  // namespace peakdec::oracle
