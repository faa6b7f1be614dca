#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace peakdec {

using Complex = std::complex<double>;

/// One term A*cos(w*n + theta) of a multi-tone source. Frequency is in
/// radians per sample.
struct SinusoidComponent {
  double amplitude = 0.0;
  double frequency = 0.0;
  double phase = 0.0;
};

/// Real-valued samples, at least two, all finite.
class TimeSeries {
 public:
  explicit TimeSeries(std::vector<double> samples);

  std::size_t size() const { return samples_.size(); }
  std::span<const double> samples() const { return samples_; }
  double operator[](std::size_t n) const { return samples_[n]; }

 private:
  std::vector<double> samples_;
};

/// Single-sided DFT bins 0..K of an N-sample real signal, K = floor(N/2).
/// Values are raw DFT sums with no one-sided amplitude doubling.
class Spectrum {
 public:
  Spectrum(std::vector<Complex> bins, std::size_t origin_length);

  /// Wraps K+1 bins assuming an even-length origin (N = 2K). Intended for
  /// spectra that were not produced by forward_spectrum.
  static Spectrum from_bins(std::vector<Complex> bins);

  std::size_t k_max() const { return bins_.size() - 1; }
  std::size_t size() const { return bins_.size(); }
  std::size_t origin_length() const { return origin_length_; }
  std::span<const Complex> bins() const { return bins_; }
  const Complex& operator[](std::size_t k) const { return bins_[k]; }

  /// Sum of |W_k|^2 over all bins.
  double power() const;

 private:
  std::vector<Complex> bins_;
  std::size_t origin_length_;
};

enum class WindowShape { Rectangular, Hann, Hamming, Custom };

struct ClipDistortion {
  double level = 1.0;
};

/// Pointwise window. For WindowShape::Custom the coefficients are used as
/// given and must match the signal length; otherwise they are generated.
struct WindowDistortion {
  WindowShape shape = WindowShape::Rectangular;
  std::vector<double> coefficients;
};

struct NoiseDistortion {
  double sigma = 0.0;
};

struct DistortionSpec;

/// Stages applied in order.
struct ComposeDistortion {
  std::vector<DistortionSpec> stages;
};

/// The observation system: clipping, windowing, additive noise or a chain of
/// those.
struct DistortionSpec {
  std::variant<ClipDistortion, WindowDistortion, NoiseDistortion, ComposeDistortion> kind;
};

/// Throws std::invalid_argument if a component (reported by index) has a
/// negative amplitude, a frequency outside [0, pi] or a phase outside
/// [-pi, pi]. An empty list gives the zero signal.
TimeSeries synth_multitone(std::span<const SinusoidComponent> components, std::size_t n_samples);

/// Symmetric window coefficients of length n (Hann and Hamming use n-1 in
/// the cosine period). Custom shapes have no closed form and are rejected.
std::vector<double> window_coefficients(WindowShape shape, std::size_t n);

/// Noise draws come from a generator seeded with `seed` only, so equal
/// inputs give bit-identical outputs.
TimeSeries apply_distortion(const TimeSeries& ts, const DistortionSpec& spec, std::uint64_t seed);

/// Single-sided DFT, O(N log N) for every N.
Spectrum forward_spectrum(const TimeSeries& ts);

/// |sin(pi(k - c)) / (pi(k - c))| sampled at k = 0..K, with 1 at k = c.
std::vector<double> sinc_leakage(double k_center, std::size_t k_max);

}  // namespace peakdec
