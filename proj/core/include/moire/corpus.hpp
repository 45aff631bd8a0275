#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moire/image.hpp"

namespace moire {

struct NamedImage {
  std::string name;
  GrayImage image;
};

/// Procedural 8-bit stand-ins for photographic test images. Every generator is
/// deterministic in (size, seed) and returns integer intensities in [0, 255].
/// Radial gradient, bright at the center. Opposite borders match, so the
/// periodic extension seen by the DFT has no seam.
GrayImage make_gradient(std::size_t width, std::size_t height);
GrayImage make_checkerboard(std::size_t width, std::size_t height, std::size_t cell);
/// White noise smoothed by a Gaussian of the given sigma, stretched to
/// [32, 224].
GrayImage make_filtered_field(std::size_t width, std::size_t height, double sigma,
                              std::uint64_t seed);
/// Soft-edged disks and ellipses over a shaded background.
GrayImage make_shapes(std::size_t width, std::size_t height, std::uint64_t seed);

/// Shapes blended with a fine-grained field.
GrayImage make_textured_shapes(std::size_t width, std::size_t height, std::uint64_t seed);

/// The default benchmark set: field, gradient, shapes and textured, in name
/// order. The checkerboard is left out because it is itself periodic, so a
/// periodic-noise detector rightly flags its harmonics.
std::vector<NamedImage> default_image_corpus(std::size_t width, std::size_t height,
                                             std::uint64_t seed = 1);

}  // namespace moire
