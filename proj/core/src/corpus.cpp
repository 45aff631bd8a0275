#include "moire/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "moire/noise.hpp"
#include "moire/pgm.hpp"

namespace moire {

namespace {

// Separable Gaussian blur with periodic borders.
std::vector<double> blur(const std::vector<double>& in, std::size_t w, std::size_t h,
                         double sigma) {
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> kernel;
  double total = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    kernel.push_back(std::exp(-(k * k) / (2.0 * sigma * sigma)));
    total += kernel.back();
  }
  for (auto& k : kernel) k /= total;
  auto at = [](long i, long n) { return static_cast<std::size_t>(((i % n) + n) % n); };
  std::vector<double> tmp(in.size(), 0.0);
  std::vector<double> out(in.size(), 0.0);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      double acc = 0.0;
      for (int k = -radius; k <= radius; ++k) {
        acc += kernel[static_cast<std::size_t>(k + radius)] *
               in[r * w + at(static_cast<long>(c) + k, static_cast<long>(w))];
      }
      tmp[r * w + c] = acc;
    }
  }
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      double acc = 0.0;
      for (int k = -radius; k <= radius; ++k) {
        acc += kernel[static_cast<std::size_t>(k + radius)] *
               tmp[at(static_cast<long>(r) + k, static_cast<long>(h)) * w + c];
      }
      out[r * w + c] = acc;
    }
  }
  return out;
}

GrayImage stretch(std::vector<double> values, std::size_t w, std::size_t h, double lo,
                  double hi) {
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  const double low = *mn;
  const double range = *mx - low;
  for (auto& v : values) v = range > 0.0 ? lo + (v - low) * (hi - lo) / range : lo;
  return quantize(GrayImage(w, h, std::move(values)));
}

}  // namespace

GrayImage make_gradient(std::size_t width, std::size_t height) {
  GrayImage img(width, height);
  const double w = static_cast<double>(width);
  const double h = static_cast<double>(height);
  // Off-center cone: smooth, not separable, no mirror symmetry.
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      const double dr = (static_cast<double>(r) - 0.45 * h) / h;
      const double dc = (static_cast<double>(c) - 0.55 * w) / w;
      img.at(r, c) = 220.0 - 240.0 * std::sqrt(dr * dr + dc * dc);
    }
  }
  return quantize(img);
}

GrayImage make_checkerboard(std::size_t width, std::size_t height, std::size_t cell) {
  GrayImage img(width, height);
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      img.at(r, c) = ((r / cell + c / cell) % 2 == 0) ? 70.0 : 180.0;
    }
  }
  return img;
}

GrayImage make_filtered_field(std::size_t width, std::size_t height, double sigma,
                              std::uint64_t seed) {
  std::vector<double> noise(width * height);
  for (std::size_t i = 0; i < noise.size(); ++i) noise[i] = hash_uniform(seed, i);
  return stretch(blur(noise, width, height, sigma), width, height, 32.0, 224.0);
}

GrayImage make_shapes(std::size_t width, std::size_t height, std::uint64_t seed) {
  const double w = static_cast<double>(width);
  const double h = static_cast<double>(height);
  std::vector<double> values(width * height);
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      values[r * width + c] = 60.0 + 40.0 * static_cast<double>(r) / h;
    }
  }
  for (std::uint64_t k = 0; k < 6; ++k) {
    const double cr = h * (0.15 + 0.7 * hash_uniform(seed, 4 * k));
    const double cc = w * (0.15 + 0.7 * hash_uniform(seed, 4 * k + 1));
    const double radius = std::min(w, h) * (0.06 + 0.12 * hash_uniform(seed, 4 * k + 2));
    const double level = 40.0 + 90.0 * hash_uniform(seed, 4 * k + 3);
    const double aspect = 0.6 + 0.8 * hash_uniform(seed + 7, k);
    for (std::size_t r = 0; r < height; ++r) {
      for (std::size_t c = 0; c < width; ++c) {
        const double dr = (static_cast<double>(r) - cr) / radius;
        const double dc = (static_cast<double>(c) - cc) / (radius * aspect);
        const double dist = std::sqrt(dr * dr + dc * dc);
        // Logistic edge about 1.5 pixels wide.
        const double edge = 1.0 / (1.0 + std::exp((dist - 1.0) * radius / 1.5));
        values[r * width + c] += level * edge;
      }
    }
  }
  return stretch(std::move(values), width, height, 24.0, 232.0);
}

GrayImage make_textured_shapes(std::size_t width, std::size_t height, std::uint64_t seed) {
  const GrayImage shapes = make_shapes(width, height, seed);
  const GrayImage texture = make_filtered_field(width, height, 1.0, seed + 1);
  std::vector<double> values(shapes.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = 0.75 * shapes.pixels()[i] + 0.25 * texture.pixels()[i];
  }
  return quantize(GrayImage(width, height, std::move(values)));
}

std::vector<NamedImage> default_image_corpus(std::size_t width, std::size_t height,
                                             std::uint64_t seed) {
  return {
      {"field", make_filtered_field(width, height, 1.5, seed)},
      {"gradient", make_gradient(width, height)},
      {"shapes", make_shapes(width, height, seed)},
      {"textured", make_textured_shapes(width, height, seed + 1)},
  };
}

}  // namespace moire
