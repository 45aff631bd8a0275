#pragma once

#include <filesystem>

#include "moire/image.hpp"
#include "moire/pgm.hpp"

namespace moire::cli {

/// Loads either a PGM (P2/P5) or a full-precision text matrix, chosen by the
/// first byte ('P' means PGM).
GrayImage read_image_any(const std::filesystem::path& path);

/// Text matrix: a "<width> <height>" line, then one line per row with values
/// printed to round-trip precision.
void write_float_matrix(const std::filesystem::path& path, const GrayImage& img);
GrayImage read_float_matrix(const std::filesystem::path& path);

}  // namespace moire::cli
