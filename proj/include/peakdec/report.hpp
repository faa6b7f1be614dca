#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "peakdec/decompose.hpp"
#include "peakdec/signal.hpp"

namespace peakdec {

/// Bumped only on incompatible changes; new fields may appear without a bump.
inline constexpr int kResultSchemaVersion = 1;

struct ReportOptions {
  /// Drop per-peak bins whose magnitude is below 1e-12 of that peak's maximum.
  bool compact = false;
};

/// Result document:
///   { schema_version, n_samples, k_max, detector,
///     threshold: {mode, value|null}, max_peaks, original_power,
///     peaks: [{index, k_star, b, error, power, bins: [{k, re, im}]}],
///     residual_power, power_ledger: [{iteration, peak_power, residual_power}],
///     power_identity: {lhs, rhs, relative_gap} }
nlohmann::json result_to_json(const DecompositionResult& result, const DecomposeConfig& config,
                              const ReportOptions& options = {});

/// `k,re,im,magnitude,power` with a header row.
std::string spectrum_to_csv(const Spectrum& spectrum);

/// `k,magnitude` with a header row.
std::string magnitudes_to_csv(const Spectrum& spectrum);

}  // namespace peakdec
