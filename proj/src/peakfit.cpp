#include "peakdec/peakfit.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "peakdec/isotonic.hpp"

namespace peakdec {

PeakFit fit_pseudo_symmetric(const Spectrum& w, std::size_t k_star, Direction b, OpCounters* counters) {
  const std::size_t k_max = w.k_max();
  const IndexOrder order = build_index_order(k_star, b, k_max);

  std::vector<double> magnitude(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) magnitude[k] = std::abs(w[k]);

  std::vector<double> chain(order.size());
  for (std::size_t m = 0; m < order.size(); ++m) chain[m] = magnitude[order[m]];
  const std::vector<double> chain_fit = nonincreasing_lsq(chain, counters);

  std::vector<double> fitted_mag(k_max + 1);
  for (std::size_t m = 0; m < order.size(); ++m) fitted_mag[order[m]] = chain_fit[m];

  std::vector<Complex> z(k_max + 1);
  double error = 0.0;
  double power = 0.0;
  for (std::size_t k = 0; k <= k_max; ++k) {
    const double mag = fitted_mag[k];
    z[k] = magnitude[k] > 0.0 ? w[k] * (mag / magnitude[k]) : Complex(mag, 0.0);
    const double d = mag - magnitude[k];
    error += d * d;
    power += std::norm(z[k]);
  }
  return PeakFit{Spectrum(std::move(z), w.origin_length()), k_star, b, error, power};
}

double fit_error(std::span<const Complex> z, std::span<const Complex> w) {
  if (z.size() != w.size()) {
    throw std::invalid_argument("fit_error needs equal bin counts");
  }
  double e = 0.0;
  for (std::size_t k = 0; k < z.size(); ++k) e += std::norm(z[k] - w[k]);
  return e;
}

}  // namespace peakdec
