#include "moire/transform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fft.hpp"

namespace moire {

namespace {

long positive_mod(long a, long n) {
  const long r = a % n;
  return r < 0 ? r + n : r;
}

// Applies 1D transforms along every row, then along every column.
void transform_2d(std::size_t width, std::size_t height, std::span<Complex> data, bool inverse) {
  const detail::FftPlan row_plan(width);
  for (std::size_t r = 0; r < height; ++r) {
    auto row = data.subspan(r * width, width);
    inverse ? row_plan.inverse(row) : row_plan.forward(row);
  }
  const detail::FftPlan col_plan(height);
  std::vector<Complex> column(height);
  for (std::size_t c = 0; c < width; ++c) {
    for (std::size_t r = 0; r < height; ++r) column[r] = data[r * width + c];
    inverse ? col_plan.inverse(column) : col_plan.forward(column);
    for (std::size_t r = 0; r < height; ++r) data[r * width + c] = column[r];
  }
}

}  // namespace

Spectrum::Spectrum(std::size_t width, std::size_t height, bool centered)
    : Spectrum(width, height, std::vector<Complex>(width * height), centered) {}

Spectrum::Spectrum(std::size_t width, std::size_t height, std::vector<Complex> data, bool centered)
    : width_(width), height_(height), centered_(centered), data_(std::move(data)) {
  if (width == 0 || height == 0) throw std::invalid_argument("spectrum dimensions must be positive");
  if (data_.size() != width * height) {
    throw std::invalid_argument("spectrum buffer holds " + std::to_string(data_.size()) +
                                " bins, expected " + std::to_string(width * height));
  }
}

Complex Spectrum::wrapped(long u, long v) const {
  const auto r = static_cast<std::size_t>(positive_mod(u, static_cast<long>(height_)));
  const auto c = static_cast<std::size_t>(positive_mod(v, static_cast<long>(width_)));
  return data_[r * width_ + c];
}

std::size_t Spectrum::mirror_row(std::size_t u) const {
  const long center = static_cast<long>(dc_row());
  return static_cast<std::size_t>(
      positive_mod(2 * center - static_cast<long>(u), static_cast<long>(height_)));
}

std::size_t Spectrum::mirror_col(std::size_t v) const {
  const long center = static_cast<long>(dc_col());
  return static_cast<std::size_t>(
      positive_mod(2 * center - static_cast<long>(v), static_cast<long>(width_)));
}

double Spectrum::energy() const {
  double sum = 0.0;
  for (const auto& s : data_) sum += std::norm(s);
  return sum;
}

Spectrum dft2d(const GrayImage& img) {
  std::vector<Complex> data(img.pixels().begin(), img.pixels().end());
  transform_2d(img.width(), img.height(), data, false);
  return Spectrum(img.width(), img.height(), std::move(data), false);
}

std::vector<Complex> idft2d_complex(const Spectrum& spec) {
  if (spec.centered()) {
    throw std::invalid_argument("idft2d expects an uncentered spectrum; apply center_shift first");
  }
  std::vector<Complex> data(spec.bins().begin(), spec.bins().end());
  transform_2d(spec.width(), spec.height(), data, true);
  const double scale = 1.0 / static_cast<double>(spec.size());
  for (auto& x : data) x *= scale;
  return data;
}

GrayImage idft2d(const Spectrum& spec) {
  const auto data = idft2d_complex(spec);
  double max_real = 0.0;
  double max_imag = 0.0;
  for (const auto& x : data) {
    max_real = std::max(max_real, std::abs(x.real()));
    max_imag = std::max(max_imag, std::abs(x.imag()));
  }
  if (max_imag > std::max(kImagResidueTolerance * max_real, kImagResidueFloor)) {
    throw SymmetryError("inverse transform is not real: max |imag| = " + std::to_string(max_imag) +
                        ", max |real| = " + std::to_string(max_real));
  }
  std::vector<double> real(data.size());
  std::transform(data.begin(), data.end(), real.begin(), [](const Complex& x) { return x.real(); });
  return GrayImage(spec.width(), spec.height(), std::move(real));
}

Spectrum center_shift(const Spectrum& spec) {
  const std::size_t h = spec.height();
  const std::size_t w = spec.width();
  // Centering rolls by +floor(n/2); un-centering by the complementary offset.
  const std::size_t row_roll = spec.centered() ? h - h / 2 : h / 2;
  const std::size_t col_roll = spec.centered() ? w - w / 2 : w / 2;
  Spectrum out(w, h, !spec.centered());
  for (std::size_t u = 0; u < h; ++u) {
    const std::size_t du = (u + row_roll) % h;
    for (std::size_t v = 0; v < w; ++v) {
      out.at(du, (v + col_roll) % w) = spec.at(u, v);
    }
  }
  return out;
}

GrayImage log_magnitude(const Spectrum& spec) {
  std::vector<double> values(spec.size());
  std::transform(spec.bins().begin(), spec.bins().end(), values.begin(),
                 [](const Complex& s) { return std::log1p(std::abs(s)); });
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double low = *lo;
  const double range = *hi - low;
  for (auto& v : values) v = range > 0.0 ? (v - low) * (255.0 / range) : 0.0;
  return GrayImage(spec.width(), spec.height(), std::move(values));
}

double hermitian_defect(const Spectrum& spec) {
  double max_mag = 0.0;
  double max_defect = 0.0;
  for (std::size_t u = 0; u < spec.height(); ++u) {
    for (std::size_t v = 0; v < spec.width(); ++v) {
      const Complex s = spec.at(u, v);
      const Complex partner = spec.at(spec.mirror_row(u), spec.mirror_col(v));
      max_mag = std::max(max_mag, std::abs(s));
      max_defect = std::max(max_defect, std::abs(s - std::conj(partner)));
    }
  }
  return max_mag > 0.0 ? max_defect / max_mag : max_defect;
}

}  // namespace moire
