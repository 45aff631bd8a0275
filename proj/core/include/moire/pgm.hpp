#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "moire/image.hpp"

namespace moire {

enum class PgmFormat { kAscii, kBinary };

enum class PgmErrorCode {
  kBadMagic,
  kBadMaxval,
  kTruncated,
  kBadDimensions,
  kMalformed,
};

class PgmError : public std::runtime_error {
 public:
  PgmError(PgmErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  PgmErrorCode code() const { return code_; }

 private:
  PgmErrorCode code_;
};

/// Parses a P2 or P5 file with maxval <= 255. Samples are rescaled to 0..255
/// when maxval is smaller. Header comments are accepted.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

/// Canonical encoding: "P5\n<w> <h>\n255\n" followed by one byte per pixel,
/// or the P2 equivalent with one text row per image row. Pixels are clamped
/// to [0, 255] and rounded half away from zero.
std::vector<std::uint8_t> write_pgm(const GrayImage& img, PgmFormat format);

/// The 8-bit sample a pixel value exports to.
std::uint8_t to_byte(double value);

/// Re-imports an image through the 8-bit grid (what a PGM round trip yields).
GrayImage quantize(const GrayImage& img);

GrayImage load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const GrayImage& img,
              PgmFormat format = PgmFormat::kBinary);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace moire
