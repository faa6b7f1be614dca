#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "peakdec/counters.hpp"
#include "peakdec/detect.hpp"
#include "peakdec/peakfit.hpp"
#include "peakdec/signal.hpp"

namespace peakdec {

/// How the residual-power threshold is chosen. Never keeps peeling until
/// max_peaks, which makes the loop an anytime procedure.
enum class ThresholdMode { Mean, Absolute, Never };

std::string_view to_string(ThresholdMode mode);
std::optional<ThresholdMode> parse_threshold_mode(std::string_view name);

inline constexpr std::size_t kDefaultMaxPeaks = 64;

struct DecomposeConfig {
  DetectorKind detector = DetectorKind::Argmax;
  ThresholdMode threshold_mode = ThresholdMode::Mean;
  /// Required for, and only allowed with, ThresholdMode::Absolute.
  std::optional<double> absolute_threshold;
  std::size_t max_peaks = kDefaultMaxPeaks;

  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

struct PowerLedgerEntry {
  double peak_power = 0.0;
  double residual_power = 0.0;
};

struct DecompositionResult {
  std::vector<PeakFit> peaks;
  Spectrum residual;
  std::vector<PowerLedgerEntry> power_ledger;
  double original_power = 0.0;
  /// Residual-power threshold in effect; empty for ThresholdMode::Never.
  std::optional<double> threshold;
};

/// Greedy peeling: detect a center on the current residual, fit both
/// directions, keep the lower-error fit (Up on ties), subtract it, and stop
/// once the residual power is at or below the threshold or max_peaks peaks
/// have been taken. The criterion is also checked before the first peak.
DecompositionResult decompose(const Spectrum& y, const DecomposeConfig& config,
                              OpCounters* counters = nullptr);

/// True iff the power of w is <= p_tau.
bool stop_criterion(const Spectrum& w, double p_tau);

/// Mean bin power of y.
double default_threshold(const Spectrum& y);

struct PowerIdentity {
  double lhs = 0.0;  // peak powers plus residual power
  double rhs = 0.0;  // original power
  double relative_gap = 0.0;
};

PowerIdentity power_check(const DecompositionResult& result);

}  // namespace peakdec
