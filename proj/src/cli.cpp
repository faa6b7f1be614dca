#include "peakdec/cli.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string_view>
#include <system_error>

#include "peakdec/report.hpp"
#include "peakdec/sample_io.hpp"

namespace peakdec::cli {

namespace {

namespace fs = std::filesystem;

spdlog::logger& log() {
  static const std::shared_ptr<spdlog::logger> logger = [] {
    auto l = std::make_shared<spdlog::logger>("peakdec",
                                              std::make_shared<spdlog::sinks::stderr_color_sink_mt>());
    l->set_pattern("[%l] %v");
    spdlog::level::level_enum level = spdlog::level::warn;
    if (const char* env = std::getenv("PEAKDEC_LOG")) {
      const std::string_view v(env);
      if (v == "debug") level = spdlog::level::debug;
      else if (v == "info") level = spdlog::level::info;
      else if (v == "warn") level = spdlog::level::warn;
    }
    l->set_level(level);
    return l;
  }();
  return *logger;
}

/// Writes every file under a temporary name and renames them into place only
/// once all writes succeeded.
class StagedOutput {
 public:
  void add(fs::path target, std::string contents) { files_.emplace_back(std::move(target), std::move(contents)); }

  void commit() {
    std::vector<fs::path> staged;
    try {
      for (const auto& [target, contents] : files_) {
        fs::path tmp = target;
        tmp += ".partial";
        staged.push_back(tmp);
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + target.string() + " for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) throw std::runtime_error("failed writing " + target.string());
      }
      for (std::size_t i = 0; i < files_.size(); ++i) fs::rename(staged[i], files_[i].first);
    } catch (...) {
      std::error_code ec;
      for (const auto& p : staged) fs::remove(p, ec);
      for (const auto& f : files_) fs::remove(f.first, ec);
      throw;
    }
  }

 private:
  std::vector<std::pair<fs::path, std::string>> files_;
};

void require_path(const fs::path& p, std::string_view flag) {
  if (p.empty()) throw std::invalid_argument(std::string(flag) + " is required");
}

Spectrum load_spectrum(const fs::path& input) {
  const SampleFile file = read_samples(input);
  if (file.samples.empty()) throw std::runtime_error(input.string() + " contains no samples");
  log().debug("read {} samples from {}", file.samples.size(), input.string());
  return forward_spectrum(TimeSeries(file.samples));
}

template <typename Fn>
int guarded(std::string_view name, Fn&& fn) {
  try {
    fn();
    return 0;
  } catch (const std::exception& e) {
    log().error("{}: {}", name, e.what());
    return 1;
  }
}

double parse_number(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("'" + std::string(s) + "' is not a number");
  }
  return v;
}

}  // namespace

DistortionSpec RunConfig::distortion() const {
  ComposeDistortion chain;
  if (clip_level) chain.stages.push_back({ClipDistortion{*clip_level}});
  if (window != WindowShape::Rectangular) chain.stages.push_back({WindowDistortion{window, {}}});
  if (awgn_sigma != 0.0) chain.stages.push_back({NoiseDistortion{awgn_sigma}});
  return DistortionSpec{std::move(chain)};
}

DecomposeConfig RunConfig::decompose_config() const {
  DecomposeConfig c;
  c.detector = detector;
  c.threshold_mode = threshold_mode;
  c.absolute_threshold = threshold_value;
  c.max_peaks = max_peaks;
  c.validate();
  return c;
}

SinusoidComponent parse_tone(const std::string& text) {
  const auto first = text.find(',');
  const auto second = first == std::string::npos ? std::string::npos : text.find(',', first + 1);
  if (second == std::string::npos || text.find(',', second + 1) != std::string::npos) {
    throw std::invalid_argument("tone '" + text + "' must be A,w,theta");
  }
  const std::string_view sv(text);
  return SinusoidComponent{parse_number(sv.substr(0, first)),
                           parse_number(sv.substr(first + 1, second - first - 1)),
                           parse_number(sv.substr(second + 1))};
}

fs::path peak_plot_path(const fs::path& output, std::size_t index) {
  fs::path p = output;
  p.replace_extension(".peak" + std::to_string(index) + ".csv");
  return p;
}

fs::path residual_plot_path(const fs::path& output) {
  fs::path p = output;
  p.replace_extension(".residual.csv");
  return p;
}

int cmd_synth(const RunConfig& config) {
  return guarded("synth", [&] {
    require_path(config.output, "--output");
    const TimeSeries clean = synth_multitone(config.tones, config.n_samples);
    const TimeSeries observed = apply_distortion(clean, config.distortion(), config.seed);
    const SampleFile file{{observed.samples().begin(), observed.samples().end()}, std::nullopt};

    StagedOutput out;
    if (format_for_path(config.output) == SampleFormat::Binary) {
      const auto bytes = format_samples_binary(file.samples);
      out.add(config.output, std::string(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
    } else {
      out.add(config.output, format_samples_csv(file));
    }
    out.commit();
    log().info("wrote {} samples to {}", file.samples.size(), config.output.string());
  });
}

int cmd_spectrum(const RunConfig& config) {
  return guarded("spectrum", [&] {
    require_path(config.input, "--input");
    require_path(config.output, "--output");
    const Spectrum y = load_spectrum(config.input);
    StagedOutput out;
    out.add(config.output, spectrum_to_csv(y));
    out.commit();
    log().info("wrote {} bins to {}", y.size(), config.output.string());
  });
}

int cmd_decompose(const RunConfig& config) {
  return guarded("decompose", [&] {
    require_path(config.input, "--input");
    require_path(config.output, "--output");
    const DecomposeConfig dc = config.decompose_config();
    const Spectrum y = load_spectrum(config.input);
    const DecompositionResult result = decompose(y, dc);
    const PowerIdentity identity = power_check(result);
    log().info("extracted {} peaks, residual power {}, power identity gap {}", result.peaks.size(),
               result.residual.power(), identity.relative_gap);

    StagedOutput out;
    out.add(config.output, result_to_json(result, dc, ReportOptions{config.compact}).dump(2) + "\n");
    if (config.emit_plot) {
      for (std::size_t r = 0; r < result.peaks.size(); ++r) {
        out.add(peak_plot_path(config.output, r + 1), magnitudes_to_csv(result.peaks[r].fitted));
      }
      out.add(residual_plot_path(config.output), magnitudes_to_csv(result.residual));
    }
    out.commit();
  });
}

int run(int argc, char** argv) {
  CLI::App app{"Pseudo-symmetric spectral peak decomposition"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> tones;
  std::string window = "rect";
  std::string detector = "argmax";
  std::string threshold = "mean";

  const std::map<std::string, WindowShape> windows{
      {"rect", WindowShape::Rectangular}, {"hann", WindowShape::Hann}, {"hamming", WindowShape::Hamming}};

  auto* synth = app.add_subcommand("synth", "Write a (distorted) multi-tone sample file");
  synth->add_option("--output", config.output, "Sample file to write (.bin for binary)")->required();
  synth->add_option("--n-samples", config.n_samples, "Number of samples")->check(CLI::Range(2, 1 << 30));
  synth->add_option("--tone", tones, "Component A,w,theta (w in rad/sample); repeatable");
  synth->add_option("--clip", config.clip_level, "Clip samples to [-level, level]")->check(CLI::PositiveNumber);
  synth->add_option("--window", window, "Window applied to the samples")
      ->check(CLI::IsMember({"rect", "hann", "hamming"}));
  synth->add_option("--awgn-sigma", config.awgn_sigma, "Standard deviation of added noise")
      ->check(CLI::NonNegativeNumber);
  synth->add_option("--seed", config.seed, "Noise seed");

  auto* spectrum = app.add_subcommand("spectrum", "Write the single-sided spectrum as CSV");
  spectrum->add_option("--input", config.input, "Sample file")->required();
  spectrum->add_option("--output", config.output, "CSV to write")->required();

  auto* dec = app.add_subcommand("decompose", "Decompose the spectrum into pseudo-symmetric peaks");
  dec->add_option("--input", config.input, "Sample file")->required();
  dec->add_option("--output", config.output, "JSON result to write")->required();
  dec->add_option("--detector", detector, "Center-bin detector")
      ->check(CLI::IsMember({"argmax", "halfband", "minband"}));
  dec->add_option("--threshold", threshold, "Stopping threshold mode")
      ->check(CLI::IsMember({"mean", "absolute", "never"}));
  dec->add_option("--threshold-value", config.threshold_value, "Residual power threshold for --threshold absolute")
      ->check(CLI::NonNegativeNumber);
  dec->add_option("--max-peaks", config.max_peaks, "Upper bound on extracted peaks")->check(CLI::PositiveNumber);
  dec->add_flag("--emit-plot", config.emit_plot, "Also write per-peak and residual magnitude CSVs");
  dec->add_flag("--compact", config.compact, "Omit negligible bins from the JSON peaks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    for (const auto& t : tones) config.tones.push_back(parse_tone(t));
  } catch (const std::exception& e) {
    log().error("{}", e.what());
    return 2;
  }
  config.window = windows.at(window);
  config.detector = *parse_detector(detector);
  config.threshold_mode = *parse_threshold_mode(threshold);

  if (*synth) return cmd_synth(config);
  if (*spectrum) return cmd_spectrum(config);
  return cmd_decompose(config);
}

}  // namespace peakdec::cli
