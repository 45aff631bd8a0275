#include "moire/pgm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <string_view>

namespace moire {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments (which run to end of line).
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  // Reads an unsigned decimal token. `what` names the field in diagnostics.
  std::uint64_t read_uint(std::string_view what, PgmErrorCode on_missing) {
    skip_separators();
    if (pos_ >= bytes_.size()) {
      throw PgmError(on_missing, "unexpected end of data while reading " + std::string(what));
    }
    if (bytes_[pos_] == '-') {
      throw PgmError(what == "maxval" || what == "sample" ? PgmErrorCode::kMalformed
                                                          : PgmErrorCode::kBadDimensions,
                     "negative " + std::string(what));
    }
    if (!std::isdigit(bytes_[pos_])) {
      throw PgmError(PgmErrorCode::kMalformed, "expected a number for " + std::string(what));
    }
    std::uint64_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw PgmError(PgmErrorCode::kMalformed, std::string(what) + " is out of range");
      }
      ++pos_;
    }
    if (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#') {
      throw PgmError(PgmErrorCode::kMalformed, "garbage after " + std::string(what));
    }
    return value;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::uint8_t peek() const { return bytes_[pos_]; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw PgmError(PgmErrorCode::kBadMagic, "not a P2/P5 PGM file");
  }
  const bool binary = bytes[1] == '5';
  HeaderReader reader(bytes);
  reader.advance(2);
  if (reader.remaining() > 0 && !std::isspace(reader.peek()) && reader.peek() != '#') {
    throw PgmError(PgmErrorCode::kBadMagic, "not a P2/P5 PGM file");
  }

  const auto width = reader.read_uint("width", PgmErrorCode::kTruncated);
  const auto height = reader.read_uint("height", PgmErrorCode::kTruncated);
  if (width == 0 || height == 0) {
    throw PgmError(PgmErrorCode::kBadDimensions, "dimensions must be positive, got " +
                                                     std::to_string(width) + "x" +
                                                     std::to_string(height));
  }
  const auto maxval = reader.read_uint("maxval", PgmErrorCode::kTruncated);
  if (maxval == 0 || maxval > 255) {
    throw PgmError(PgmErrorCode::kBadMaxval,
                   "maxval must be in 1..255, got " + std::to_string(maxval));
  }

  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<double> data;
  data.reserve(count);
  const double scale = 255.0 / static_cast<double>(maxval);

  auto push_sample = [&](std::uint64_t sample) {
    if (sample > maxval) {
      throw PgmError(PgmErrorCode::kMalformed, "sample " + std::to_string(sample) +
                                                   " exceeds maxval " + std::to_string(maxval));
    }
    data.push_back(maxval == 255 ? static_cast<double>(sample)
                                 : std::round(static_cast<double>(sample) * scale));
  };

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (reader.remaining() == 0) throw PgmError(PgmErrorCode::kTruncated, "missing raster");
    reader.advance(1);
    if (reader.remaining() < count) {
      throw PgmError(PgmErrorCode::kTruncated, "raster holds " +
                                                   std::to_string(reader.remaining()) +
                                                   " bytes, expected " + std::to_string(count));
    }
    for (std::size_t i = 0; i < count; ++i) push_sample(bytes[reader.pos() + i]);
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      push_sample(reader.read_uint("sample", PgmErrorCode::kTruncated));
    }
  }
  return GrayImage(width, height, std::move(data));
}

std::uint8_t to_byte(double value) {
  const double clamped = std::clamp(value, 0.0, 255.0);
  // std::round rounds halfway cases away from zero.
  return static_cast<std::uint8_t>(std::round(clamped));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img, PgmFormat format) {
  const std::string header = std::string(format == PgmFormat::kBinary ? "P5" : "P2") + "\n" +
                             std::to_string(img.width()) + " " + std::to_string(img.height()) +
                             "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const auto pixels = img.pixels();
  if (format == PgmFormat::kBinary) {
    out.reserve(out.size() + pixels.size());
    for (double v : pixels) out.push_back(to_byte(v));
    return out;
  }
  for (std::size_t r = 0; r < img.height(); ++r) {
    for (std::size_t c = 0; c < img.width(); ++c) {
      if (c > 0) out.push_back(' ');
      const auto text = std::to_string(to_byte(img.at(r, c)));
      out.insert(out.end(), text.begin(), text.end());
    }
    out.push_back('\n');
  }
  return out;
}

GrayImage quantize(const GrayImage& img) {
  std::vector<double> data;
  data.reserve(img.size());
  for (double v : img.pixels()) data.push_back(to_byte(v));
  return GrayImage(img.width(), img.height(), std::move(data));
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

GrayImage load_pgm(const std::filesystem::path& path) { return read_pgm(read_file_bytes(path)); }

void save_pgm(const std::filesystem::path& path, const GrayImage& img, PgmFormat format) {
  write_file_bytes(path, write_pgm(img, format));
}

}  // namespace moire
