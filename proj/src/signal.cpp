#include "peakdec/signal.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace peakdec {

namespace {

bool all_finite(std::span<const double> xs) {
  return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

// FFTW's planner keeps global state; execution of an existing plan is
// reentrant but creation and destruction are not.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

struct PlanDestroy {
  void operator()(fftw_plan p) const {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(p);
  }
};

using PlanPtr = std::unique_ptr<std::remove_pointer_t<fftw_plan>, PlanDestroy>;

void apply_stage(std::vector<double>& x, const DistortionSpec& spec, std::mt19937_64& rng);

void apply_stage(std::vector<double>& x, const ClipDistortion& clip, std::mt19937_64&) {
  if (!(clip.level > 0.0) || !std::isfinite(clip.level)) {
    throw std::invalid_argument("clip level must be a positive finite number");
  }
  for (double& v : x) v = std::clamp(v, -clip.level, clip.level);
}

void apply_stage(std::vector<double>& x, const WindowDistortion& window, std::mt19937_64&) {
  std::vector<double> generated;
  std::span<const double> coeffs = window.coefficients;
  if (window.shape != WindowShape::Custom) {
    generated = window_coefficients(window.shape, x.size());
    coeffs = generated;
  }
  if (coeffs.size() != x.size()) {
    throw std::invalid_argument("window has " + std::to_string(coeffs.size()) +
                                " coefficients but the signal has " + std::to_string(x.size()) +
                                " samples");
  }
  if (!all_finite(coeffs)) throw std::invalid_argument("window coefficients must be finite");
  for (std::size_t n = 0; n < x.size(); ++n) x[n] *= coeffs[n];
}

void apply_stage(std::vector<double>& x, const NoiseDistortion& noise, std::mt19937_64& rng) {
  if (!(noise.sigma >= 0.0) || !std::isfinite(noise.sigma)) {
    throw std::invalid_argument("noise sigma must be a nonnegative finite number");
  }
  if (noise.sigma == 0.0) return;
  std::normal_distribution<double> gauss(0.0, noise.sigma);
  for (double& v : x) v += gauss(rng);
}

void apply_stage(std::vector<double>& x, const ComposeDistortion& compose, std::mt19937_64& rng) {
  for (const auto& stage : compose.stages) apply_stage(x, stage, rng);
}

void apply_stage(std::vector<double>& x, const DistortionSpec& spec, std::mt19937_64& rng) {
  std::visit([&](const auto& s) { apply_stage(x, s, rng); }, spec.kind);
}

}  // namespace

TimeSeries::TimeSeries(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 2) throw std::invalid_argument("a time series needs at least 2 samples");
  if (!all_finite(samples_)) throw std::invalid_argument("time series samples must be finite");
}

Spectrum::Spectrum(std::vector<Complex> bins, std::size_t origin_length)
    : bins_(std::move(bins)), origin_length_(origin_length) {
  if (origin_length_ < 2) throw std::invalid_argument("spectrum origin length must be at least 2");
  if (bins_.size() != origin_length_ / 2 + 1) {
    throw std::invalid_argument("spectrum of length-" + std::to_string(origin_length_) +
                                " signal needs " + std::to_string(origin_length_ / 2 + 1) +
                                " bins, got " + std::to_string(bins_.size()));
  }
  for (const Complex& c : bins_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("spectrum bins must be finite");
    }
  }
}

Spectrum Spectrum::from_bins(std::vector<Complex> bins) {
  if (bins.size() < 2) throw std::invalid_argument("a spectrum needs at least 2 bins");
  const std::size_t n = 2 * (bins.size() - 1);
  return Spectrum(std::move(bins), n);
}

double Spectrum::power() const {
  double p = 0.0;
  for (const Complex& c : bins_) p += std::norm(c);
  return p;
}

TimeSeries synth_multitone(std::span<const SinusoidComponent> components, std::size_t n_samples) {
  if (n_samples < 2) throw std::invalid_argument("n_samples must be at least 2");
  for (std::size_t r = 0; r < components.size(); ++r) {
    const auto& c = components[r];
    const bool ok = std::isfinite(c.amplitude) && c.amplitude >= 0.0 &&
                    std::isfinite(c.frequency) && c.frequency >= 0.0 &&
                    c.frequency <= std::numbers::pi && std::isfinite(c.phase) &&
                    c.phase >= -std::numbers::pi && c.phase <= std::numbers::pi;
    if (!ok) throw std::invalid_argument("invalid sinusoid component at index " + std::to_string(r));
  }
  std::vector<double> x(n_samples, 0.0);
  for (std::size_t n = 0; n < n_samples; ++n) {
    double acc = 0.0;
    for (const auto& c : components) {
      acc += c.amplitude * std::cos(c.frequency * static_cast<double>(n) + c.phase);
    }
    x[n] = acc;
  }
  return TimeSeries(std::move(x));
}

std::vector<double> window_coefficients(WindowShape shape, std::size_t n) {
  if (n == 0) throw std::invalid_argument("window length must be positive");
  std::vector<double> w(n, 1.0);
  if (shape == WindowShape::Rectangular || n == 1) {
    if (shape == WindowShape::Custom) throw std::invalid_argument("custom windows need explicit coefficients");
    return w;
  }
  const double period = static_cast<double>(n - 1);
  switch (shape) {
    case WindowShape::Hann:
      for (std::size_t i = 0; i < n; ++i) {
        w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / period);
      }
      break;
    case WindowShape::Hamming:
      for (std::size_t i = 0; i < n; ++i) {
        w[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / period);
      }
      break;
    case WindowShape::Custom:
      throw std::invalid_argument("custom windows need explicit coefficients");
    case WindowShape::Rectangular:
      break;
  }
  return w;
}

TimeSeries apply_distortion(const TimeSeries& ts, const DistortionSpec& spec, std::uint64_t seed) {
  std::vector<double> x(ts.samples().begin(), ts.samples().end());
  std::mt19937_64 rng(seed);
  apply_stage(x, spec, rng);
  return TimeSeries(std::move(x));
}

Spectrum forward_spectrum(const TimeSeries& ts) {
  const std::size_t n = ts.size();
  const std::size_t bins = n / 2 + 1;

  std::unique_ptr<double, FftwFree> in(static_cast<double*>(fftw_malloc(sizeof(double) * n)));
  std::unique_ptr<fftw_complex, FftwFree> out(
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * bins)));
  if (!in || !out) throw std::bad_alloc();

  PlanPtr plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan.reset(fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(), FFTW_ESTIMATE));
  }
  if (!plan) throw std::runtime_error("FFTW failed to create a plan");

  std::copy(ts.samples().begin(), ts.samples().end(), in.get());
  fftw_execute(plan.get());

  std::vector<Complex> y(bins);
  for (std::size_t k = 0; k < bins; ++k) y[k] = Complex(out.get()[k][0], out.get()[k][1]);
  return Spectrum(std::move(y), n);
}

std::vector<double> sinc_leakage(double k_center, std::size_t k_max) {
  if (!(k_center >= 0.0) || k_center > static_cast<double>(k_max)) {
    throw std::invalid_argument("sinc center must lie in [0, K]");
  }
  std::vector<double> s(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const double d = static_cast<double>(k) - k_center;
    if (d == 0.0) {
      s[k] = 1.0;
    } else if (d == std::round(d)) {
      // sin(pi*d) only rounds to zero for integer d
      s[k] = 0.0;
    } else {
      const double x = std::numbers::pi * d;
      s[k] = std::abs(std::sin(x) / x);
    }
  }
  return s;
}

}  // namespace peakdec
