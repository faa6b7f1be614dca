#include "peakdec/detect.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace peakdec {

namespace {

std::vector<double> bin_powers(const Spectrum& w) {
  std::vector<double> p(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) p[k] = std::norm(w[k]);
  return p;
}

std::size_t argmax_magnitude(const Spectrum& w, std::size_t first, std::size_t count) {
  std::size_t best = first;
  double best_mag = -1.0;
  for (std::size_t k = first; k < first + count; ++k) {
    const double mag = std::abs(w[k]);
    if (mag > best_mag) {
      best_mag = mag;
      best = k;
    }
  }
  return best;
}

}  // namespace

std::string_view to_string(DetectorKind kind) {
  switch (kind) {
    case DetectorKind::Argmax: return "argmax";
    case DetectorKind::Halfband: return "halfband";
    case DetectorKind::Minband: return "minband";
  }
  return "unknown";
}

std::optional<DetectorKind> parse_detector(std::string_view name) {
  if (name == "argmax") return DetectorKind::Argmax;
  if (name == "halfband") return DetectorKind::Halfband;
  if (name == "minband") return DetectorKind::Minband;
  return std::nullopt;
}

std::size_t detect_argmax(const Spectrum& w, OpCounters* counters) {
  if (counters) counters->detector_window_evals += w.size();
  const std::size_t k = argmax_magnitude(w, 0, w.size());
  if (!std::isfinite(std::abs(w[k]))) throw std::invalid_argument("spectrum has no finite magnitude");
  return k;
}

std::size_t detect_halfband(const Spectrum& w, OpCounters* counters) {
  const std::vector<double> p = bin_powers(w);
  std::size_t lo = 0;
  std::size_t len = p.size();
  std::uint64_t evals = 0;
  while (len > 1) {
    const std::size_t span = (len + 1) / 2;
    double sum = 0.0;
    for (std::size_t k = lo; k < lo + span; ++k) sum += p[k];
    evals += span;
    double best = sum;
    std::size_t best_start = lo;
    for (std::size_t s = lo + 1; s + span <= lo + len; ++s) {
      sum = (sum + p[s + span - 1]) - p[s - 1];
      ++evals;
      if (sum > best) {
        best = sum;
        best_start = s;
      }
    }
    lo = best_start;
    len = span;
  }
  if (counters) counters->detector_window_evals += evals;
  return lo;
}

BandDetection detect_minband(const Spectrum& w, OpCounters* counters) {
  const std::vector<double> p = bin_powers(w);
  const std::size_t n = p.size();
  double total = 0.0;
  for (double v : p) total += v;
  std::uint64_t evals = n;
  if (!(total > 0.0)) {
    if (counters) counters->detector_window_evals += evals;
    return BandDetection{0, 0, n, true};
  }

  const double half = 0.5 * total;
  std::size_t best_start = 0;
  std::size_t best_len = std::numeric_limits<std::size_t>::max();
  std::size_t end = 0;  // exclusive
  double sum = 0.0;
  for (std::size_t start = 0; start < n; ++start) {
    while (end < n && sum < half) {
      sum += p[end++];
      ++evals;
    }
    if (sum < half) break;  // no band starting here or later reaches half
    if (end - start < best_len) {
      best_len = end - start;
      best_start = start;
    }
    sum -= p[start];
    ++evals;
  }
  // The prefix sum reaches the full total, so at least start = 0 succeeds
  // unless rounding kept it a hair below half.
  if (best_len == std::numeric_limits<std::size_t>::max()) {
    best_start = 0;
    best_len = n;
  }
  evals += best_len;
  if (counters) counters->detector_window_evals += evals;
  return BandDetection{argmax_magnitude(w, best_start, best_len), best_start, best_len, false};
}

std::size_t detect_center(DetectorKind kind, const Spectrum& w, OpCounters* counters) {
  switch (kind) {
    case DetectorKind::Argmax: return detect_argmax(w, counters);
    case DetectorKind::Halfband: return detect_halfband(w, counters);
    case DetectorKind::Minband: return detect_minband(w, counters).k_star;
  }
  throw std::invalid_argument("unknown detector kind");
}

PeakFit exhaustive_best_fit(const Spectrum& w, std::size_t max_k) {
  if (w.k_max() > max_k) {
    throw std::invalid_argument("exhaustive search is capped at K = " + std::to_string(max_k) +
                                ", got K = " + std::to_string(w.k_max()));
  }
  std::optional<PeakFit> best;
  for (std::size_t k = 0; k <= w.k_max(); ++k) {
    for (Direction b : {Direction::Up, Direction::Down}) {
      PeakFit fit = fit_pseudo_symmetric(w, k, b);
      if (!best || fit.error < best->error) best = std::move(fit);
    }
  }
  return std::move(*best);
}

}  // namespace peakdec
