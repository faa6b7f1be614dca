#include "peakdec/report.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace peakdec {

namespace {

void append_number(std::string& out, double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), res.ptr);
}

void append_number(std::string& out, std::size_t v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), res.ptr);
}

nlohmann::json peak_to_json(const PeakFit& peak, std::size_t index, bool compact) {
  double floor = 0.0;
  if (compact) {
    double max_mag = 0.0;
    for (const Complex& c : peak.fitted.bins()) max_mag = std::max(max_mag, std::abs(c));
    floor = 1e-12 * max_mag;
  }
  auto bins = nlohmann::json::array();
  for (std::size_t k = 0; k < peak.fitted.size(); ++k) {
    const Complex& c = peak.fitted[k];
    if (compact && std::abs(c) < floor) continue;
    bins.push_back({{"k", k}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {
      {"index", index},
      {"k_star", peak.k_star},
      {"b", sign(peak.direction)},
      {"error", peak.error},
      {"power", peak.power},
      {"bins", std::move(bins)},
  };
}

}  // namespace

nlohmann::json result_to_json(const DecompositionResult& result, const DecomposeConfig& config,
                              const ReportOptions& options) {
  auto peaks = nlohmann::json::array();
  for (std::size_t r = 0; r < result.peaks.size(); ++r) {
    peaks.push_back(peak_to_json(result.peaks[r], r + 1, options.compact));
  }
  auto ledger = nlohmann::json::array();
  for (std::size_t r = 0; r < result.power_ledger.size(); ++r) {
    ledger.push_back({{"iteration", r + 1},
                      {"peak_power", result.power_ledger[r].peak_power},
                      {"residual_power", result.power_ledger[r].residual_power}});
  }
  const PowerIdentity identity = power_check(result);

  nlohmann::json threshold = {{"mode", to_string(config.threshold_mode)}, {"value", nullptr}};
  if (result.threshold) threshold["value"] = *result.threshold;

  return {
      {"schema_version", kResultSchemaVersion},
      {"n_samples", result.residual.origin_length()},
      {"k_max", result.residual.k_max()},
      {"detector", to_string(config.detector)},
      {"threshold", std::move(threshold)},
      {"max_peaks", config.max_peaks},
      {"original_power", result.original_power},
      {"peaks", std::move(peaks)},
      {"residual_power", result.residual.power()},
      {"power_ledger", std::move(ledger)},
      {"power_identity",
       {{"lhs", identity.lhs}, {"rhs", identity.rhs}, {"relative_gap", identity.relative_gap}}},
  };
}

std::string spectrum_to_csv(const Spectrum& spectrum) {
  std::string out = "k,re,im,magnitude,power\n";
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    const Complex& c = spectrum[k];
    append_number(out, k);
    out += ',';
    append_number(out, c.real());
    out += ',';
    append_number(out, c.imag());
    out += ',';
    append_number(out, std::abs(c));
    out += ',';
    append_number(out, std::norm(c));
    out += '\n';
  }
  return out;
}

std::string magnitudes_to_csv(const Spectrum& spectrum) {
  std::string out = "k,magnitude\n";
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    append_number(out, k);
    out += ',';
    append_number(out, std::abs(spectrum[k]));
    out += '\n';
  }
  return out;
}

}  // namespace peakdec
