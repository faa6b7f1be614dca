#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace peakdec {

/// Raw samples as stored on disk. The sample rate is carried through from
/// the CSV header when present; nothing in the decomposition uses it.
struct SampleFile {
  std::vector<double> samples;
  std::optional<double> sample_rate;
};

enum class SampleFormat { Csv, Binary };

/// 8-byte magic that starts a binary sample file, followed by little-endian
/// IEEE-754 doubles.
inline constexpr std::string_view kBinaryMagic = "PKDC0001";

/// Parse failure. `line()` is 1-based for CSV input and 0 for binary input.
class SampleParseError : public std::runtime_error {
 public:
  SampleParseError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// One sample per line, optional first line `# sample_rate=<float>`. Blank
/// lines are ignored. Decimal points are parsed without regard to locale.
SampleFile parse_samples_csv(std::string_view text);
SampleFile parse_samples_binary(std::span<const std::byte> bytes);

/// Shortest round-trip decimal form, so a re-parse is bit-exact.
std::string format_samples_csv(const SampleFile& file);
std::vector<std::byte> format_samples_binary(std::span<const double> samples);

/// `.bin` and `.pkdc` select the binary format, anything else CSV.
SampleFormat format_for_path(const std::filesystem::path& path);

/// Sniffs the magic header to choose the parser.
SampleFile read_samples(const std::filesystem::path& path);
void write_samples(const std::filesystem::path& path, const SampleFile& file, SampleFormat format);

}  // namespace peakdec
