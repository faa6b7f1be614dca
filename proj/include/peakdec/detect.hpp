#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "peakdec/counters.hpp"
#include "peakdec/peakfit.hpp"
#include "peakdec/signal.hpp"

namespace peakdec {

enum class DetectorKind { Argmax, Halfband, Minband };

std::string_view to_string(DetectorKind kind);
std::optional<DetectorKind> parse_detector(std::string_view name);

// All detectors break ties toward the smallest bin or window start.

/// First bin of largest magnitude.
std::size_t detect_argmax(const Spectrum& w, OpCounters* counters = nullptr);

/// Repeatedly narrows the search band to its most powerful contiguous
/// sub-band of ceil(len/2) bins until one bin is left. Window sums slide by
/// one bin per step, and the band halves each round, so the total is O(K).
std::size_t detect_halfband(const Spectrum& w, OpCounters* counters = nullptr);

struct BandDetection {
  std::size_t k_star = 0;
  std::size_t band_start = 0;
  std::size_t band_length = 0;
  /// Set when the spectrum carries no power; k_star is then 0.
  bool degenerate = false;
};

/// Shortest contiguous band holding at least half the total power, found
/// with a two-pointer sweep; k_star is the largest-magnitude bin inside it.
BandDetection detect_minband(const Spectrum& w, OpCounters* counters = nullptr);

std::size_t detect_center(DetectorKind kind, const Spectrum& w, OpCounters* counters = nullptr);

inline constexpr std::size_t kExhaustiveDefaultCap = 256;

/// Fits every (k*, b) pair and keeps the lowest error, preferring the smaller
/// k* and then Up on ties. Quadratic in K; for tests and diagnostics.
/// Throws std::invalid_argument when K exceeds `max_k`.
PeakFit exhaustive_best_fit(const Spectrum& w, std::size_t max_k = kExhaustiveDefaultCap);

}  // namespace peakdec
