#include "peakdec/sample_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

namespace peakdec {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::uint64_t to_little_endian(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::big) {
    std::uint64_t r = 0;
    for (int i = 0; i < 8; ++i) r |= ((v >> (8 * i)) & 0xFFu) << (8 * (7 - i));
    return r;
  }
  return v;
}

std::vector<std::byte> read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<std::byte> bytes(raw.size());
  std::memcpy(bytes.data(), raw.data(), raw.size());
  return bytes;
}

}  // namespace

SampleFile parse_samples_csv(std::string_view text) {
  SampleFile file;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '#') {
      constexpr std::string_view key = "sample_rate=";
      const std::string_view body = trim(line.substr(1));
      if (seen_content || !body.starts_with(key)) {
        throw SampleParseError(line_no, "line " + std::to_string(line_no) +
                                            ": unexpected comment; only a leading '# sample_rate=' header is allowed");
      }
      const auto rate = parse_double(trim(body.substr(key.size())));
      if (!rate || !std::isfinite(*rate) || *rate <= 0.0) {
        throw SampleParseError(line_no, "line " + std::to_string(line_no) + ": invalid sample rate");
      }
      file.sample_rate = *rate;
      seen_content = true;
      continue;
    }

    seen_content = true;
    const auto value = parse_double(line);
    if (!value || !std::isfinite(*value)) {
      throw SampleParseError(line_no, "line " + std::to_string(line_no) + ": cannot parse '" +
                                          std::string(line) + "' as a finite number");
    }
    file.samples.push_back(*value);
  }
  return file;
}

SampleFile parse_samples_binary(std::span<const std::byte> bytes) {
  if (bytes.size() < kBinaryMagic.size() ||
      std::memcmp(bytes.data(), kBinaryMagic.data(), kBinaryMagic.size()) != 0) {
    throw SampleParseError(0, "missing PKDC0001 magic header");
  }
  const auto payload = bytes.subspan(kBinaryMagic.size());
  if (payload.size() % 8 != 0) {
    throw SampleParseError(0, "binary payload is not a whole number of 64-bit samples");
  }
  SampleFile file;
  file.samples.resize(payload.size() / 8);
  for (std::size_t i = 0; i < file.samples.size(); ++i) {
    std::uint64_t bits = 0;
    std::memcpy(&bits, payload.data() + 8 * i, 8);
    const double v = std::bit_cast<double>(to_little_endian(bits));
    if (!std::isfinite(v)) {
      throw SampleParseError(0, "sample " + std::to_string(i) + " is not finite");
    }
    file.samples[i] = v;
  }
  return file;
}

std::string format_samples_csv(const SampleFile& file) {
  std::string out;
  std::array<char, 64> buf{};
  if (file.sample_rate) {
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), *file.sample_rate);
    out += "# sample_rate=";
    out.append(buf.data(), res.ptr);
    out += '\n';
  }
  for (double v : file.samples) {
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    out.append(buf.data(), res.ptr);
    out += '\n';
  }
  return out;
}

std::vector<std::byte> format_samples_binary(std::span<const double> samples) {
  std::vector<std::byte> out(kBinaryMagic.size() + 8 * samples.size());
  std::memcpy(out.data(), kBinaryMagic.data(), kBinaryMagic.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::uint64_t bits = to_little_endian(std::bit_cast<std::uint64_t>(samples[i]));
    std::memcpy(out.data() + kBinaryMagic.size() + 8 * i, &bits, 8);
  }
  return out;
}

SampleFormat format_for_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return (ext == ".bin" || ext == ".pkdc") ? SampleFormat::Binary : SampleFormat::Csv;
}

SampleFile read_samples(const std::filesystem::path& path) {
  const auto bytes = read_all(path);
  if (bytes.size() >= kBinaryMagic.size() &&
      std::memcmp(bytes.data(), kBinaryMagic.data(), kBinaryMagic.size()) == 0) {
    return parse_samples_binary(bytes);
  }
  return parse_samples_csv(
      std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

void write_samples(const std::filesystem::path& path, const SampleFile& file, SampleFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  if (format == SampleFormat::Binary) {
    const auto bytes = format_samples_binary(file.samples);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  } else {
    const auto text = format_samples_csv(file);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
  }
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace peakdec
