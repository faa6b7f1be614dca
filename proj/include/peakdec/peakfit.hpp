#pragma once

#include <cstddef>
#include <span>

#include "peakdec/counters.hpp"
#include "peakdec/order.hpp"
#include "peakdec/signal.hpp"

namespace peakdec {

/// One fitted pseudo-symmetric peak spanning all K+1 bins.
struct PeakFit {
  Spectrum fitted;
  std::size_t k_star = 0;
  Direction direction = Direction::Up;
  /// Sum of (|Z_k| - |W_k|)^2, equal to the complex squared error because
  /// each Z_k carries the phase of W_k.
  double error = 0.0;
  /// Sum of |Z_k|^2.
  double power = 0.0;
};

/// Projects |W| onto magnitudes that do not increase along
/// build_index_order(k_star, b, K), then reattaches the phase of each W_k.
/// Bins where W_k is zero get a real nonnegative value.
PeakFit fit_pseudo_symmetric(const Spectrum& w, std::size_t k_star, Direction b,
                             OpCounters* counters = nullptr);

/// Sum of |z_k - w_k|^2. Throws std::invalid_argument on length mismatch.
double fit_error(std::span<const Complex> z, std::span<const Complex> w);

}  // namespace peakdec
