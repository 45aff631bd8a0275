#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace moire::testing {

GrayImage random_image(std::size_t width, std::size_t height, std::uint64_t seed, double lo,
                       double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> data(width * height);
  for (auto& v : data) v = dist(rng);
  return GrayImage(width, height, std::move(data));
}

GrayImage random_levels(std::size_t width, std::size_t height, std::uint64_t seed, int levels) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, levels - 1);
  std::vector<double> data(width * height);
  for (auto& v : data) v = dist(rng);
  return GrayImage(width, height, std::move(data));
}

namespace {

Complex twiddle(std::size_t k, std::size_t n, double sign) {
  const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k % n) /
                       static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

Spectrum direct_dft(const GrayImage& img) {
  const std::size_t h = img.height();
  const std::size_t w = img.width();
  Spectrum out(w, h, false);
  for (std::size_t u = 0; u < h; ++u) {
    for (std::size_t v = 0; v < w; ++v) {
      Complex acc{0.0, 0.0};
      for (std::size_t x = 0; x < h; ++x) {
        for (std::size_t y = 0; y < w; ++y) {
          acc += img.at(x, y) * twiddle(u * x, h, -1.0) * twiddle(v * y, w, -1.0);
        }
      }
      out.at(u, v) = acc;
    }
  }
  return out;
}

std::vector<Complex> direct_idft(const Spectrum& spec) {
  const std::size_t h = spec.height();
  const std::size_t w = spec.width();
  std::vector<Complex> out(w * h);
  for (std::size_t x = 0; x < h; ++x) {
    for (std::size_t y = 0; y < w; ++y) {
      Complex acc{0.0, 0.0};
      for (std::size_t u = 0; u < h; ++u) {
        for (std::size_t v = 0; v < w; ++v) {
          acc += spec.at(u, v) * twiddle(u * x, h, 1.0) * twiddle(v * y, w, 1.0);
        }
      }
      out[x * w + y] = acc / static_cast<double>(w * h);
    }
  }
  return out;
}

GrayImage sort_median(const GrayImage& img, int window) {
  const long r = window / 2;
  GrayImage out(img.width(), img.height());
  std::vector<double> samples;
  for (std::size_t row = 0; row < img.height(); ++row) {
    for (std::size_t col = 0; col < img.width(); ++col) {
      samples.clear();
      for (long dr = -r; dr <= r; ++dr) {
        for (long dc = -r; dc <= r; ++dc) {
          samples.push_back(img.clamped(static_cast<long>(row) + dr, static_cast<long>(col) + dc));
        }
      }
      std::sort(samples.begin(), samples.end());
      out.at(row, col) = samples[samples.size() / 2];
    }
  }
  return out;
}

GrayImage gaussian_convolution(const GrayImage& img, double sigma, int radius) {
  GrayImage out(img.width(), img.height());
  for (std::size_t row = 0; row < img.height(); ++row) {
    for (std::size_t col = 0; col < img.width(); ++col) {
      double num = 0.0;
      double den = 0.0;
      for (long dr = -radius; dr <= radius; ++dr) {
        for (long dc = -radius; dc <= radius; ++dc) {
          const double w = std::exp(-static_cast<double>(dr * dr + dc * dc) / (2.0 * sigma * sigma));
          num += w * img.clamped(static_cast<long>(row) + dr, static_cast<long>(col) + dc);
          den += w;
        }
      }
      out.at(row, col) = num / den;
    }
  }
  return out;
}

double loop_mse(const GrayImage& a, const GrayImage& b) {
  double sum = 0.0;
  for (std::size_t row = 0; row < a.height(); ++row) {
    for (std::size_t col = 0; col < a.width(); ++col) {
      const double d = a.at(row, col) - b.at(row, col);
      sum += d * d;
    }
  }
  return sum / static_cast<double>(a.size());
}

double max_abs_diff(const GrayImage& a, const GrayImage& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.pixels()[i] - b.pixels()[i]));
  }
  return worst;
}

}  // namespace moire::testing
