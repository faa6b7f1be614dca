#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "peakdec/decompose.hpp"
#include "peakdec/detect.hpp"
#include "peakdec/signal.hpp"

namespace peakdec::cli {

struct RunConfig {
  std::filesystem::path input;
  std::filesystem::path output;

  DetectorKind detector = DetectorKind::Argmax;
  ThresholdMode threshold_mode = ThresholdMode::Mean;
  std::optional<double> threshold_value;
  std::size_t max_peaks = kDefaultMaxPeaks;

  std::vector<SinusoidComponent> tones;
  std::size_t n_samples = 1024;
  std::optional<double> clip_level;
  WindowShape window = WindowShape::Rectangular;
  double awgn_sigma = 0.0;
  std::uint64_t seed = 0;

  bool emit_plot = false;
  bool compact = false;

  /// Clip, then window, then noise.
  DistortionSpec distortion() const;
  DecomposeConfig decompose_config() const;
};

/// Each command returns 0 only after every output file has been fully
/// written; on failure nothing is left behind at the output paths.
int cmd_synth(const RunConfig& config);
int cmd_spectrum(const RunConfig& config);
int cmd_decompose(const RunConfig& config);

/// Paths of the side files written by `decompose --emit-plot`.
std::filesystem::path peak_plot_path(const std::filesystem::path& output, std::size_t index);
std::filesystem::path residual_plot_path(const std::filesystem::path& output);

/// Parses "A,w,theta" using '.' as the decimal point.
SinusoidComponent parse_tone(const std::string& text);

int run(int argc, char** argv);

}  // namespace peakdec::cli
