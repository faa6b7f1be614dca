#include "peakdec/decompose.hpp"

#include <cmath>
#include <stdexcept>

namespace peakdec {

std::string_view to_string(ThresholdMode mode) {
  switch (mode) {
    case ThresholdMode::Mean: return "mean";
    case ThresholdMode::Absolute: return "absolute";
    case ThresholdMode::Never: return "never";
  }
  return "unknown";
}

std::optional<ThresholdMode> parse_threshold_mode(std::string_view name) {
  if (name == "mean") return ThresholdMode::Mean;
  if (name == "absolute") return ThresholdMode::Absolute;
  if (name == "never") return ThresholdMode::Never;
  return std::nullopt;
}

void DecomposeConfig::validate() const {
  if (max_peaks < 1) throw std::invalid_argument("max_peaks must be at least 1");
  if (threshold_mode == ThresholdMode::Absolute) {
    if (!absolute_threshold) throw std::invalid_argument("absolute threshold mode needs a threshold value");
    if (!std::isfinite(*absolute_threshold) || *absolute_threshold < 0.0) {
      throw std::invalid_argument("absolute threshold must be finite and nonnegative");
    }
  } else if (absolute_threshold) {
    throw std::invalid_argument("a threshold value is only accepted with the absolute mode");
  }
}

bool stop_criterion(const Spectrum& w, double p_tau) { return w.power() <= p_tau; }

double default_threshold(const Spectrum& y) {
  return y.power() / static_cast<double>(y.size());
}

DecompositionResult decompose(const Spectrum& y, const DecomposeConfig& config, OpCounters* counters) {
  config.validate();

  std::optional<double> p_tau;
  switch (config.threshold_mode) {
    case ThresholdMode::Mean: p_tau = default_threshold(y); break;
    case ThresholdMode::Absolute: p_tau = config.absolute_threshold; break;
    case ThresholdMode::Never: break;
  }

  std::vector<PeakFit> peaks;
  std::vector<PowerLedgerEntry> ledger;
  Spectrum w = y;
  while (peaks.size() < config.max_peaks && !(p_tau && stop_criterion(w, *p_tau))) {
    const std::size_t k_star = detect_center(config.detector, w, counters);
    PeakFit up = fit_pseudo_symmetric(w, k_star, Direction::Up, counters);
    PeakFit down = fit_pseudo_symmetric(w, k_star, Direction::Down, counters);
    PeakFit chosen = up.error <= down.error ? std::move(up) : std::move(down);

    std::vector<Complex> next(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) next[k] = w[k] - chosen.fitted[k];
    if (counters) counters->subtraction_bin_updates += w.size();
    w = Spectrum(std::move(next), y.origin_length());

    ledger.push_back({chosen.power, w.power()});
    peaks.push_back(std::move(chosen));
  }

  return DecompositionResult{std::move(peaks), std::move(w), std::move(ledger), y.power(), p_tau};
}

PowerIdentity power_check(const DecompositionResult& result) {
  double lhs = 0.0;
  for (const auto& peak : result.peaks) lhs += peak.fitted.power();
  lhs += result.residual.power();
  const double rhs = result.original_power;
  const double gap = std::abs(lhs - rhs);
  return PowerIdentity{lhs, rhs, rhs > 0.0 ? gap / rhs : gap};
}

}  // namespace peakdec
