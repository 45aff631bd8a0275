#include "moire/image.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace moire {

namespace {

void check_dimensions(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) {
    throw std::invalid_argument("image dimensions must be positive, got " +
                                std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

GrayImage::GrayImage(std::size_t width, std::size_t height, double fill)
    : width_(width), height_(height) {
  check_dimensions(width, height);
  if (!std::isfinite(fill)) throw std::domain_error("fill value must be finite");
  data_.assign(width * height, fill);
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
  check_dimensions(width, height);
  if (data_.size() != width * height) {
    throw std::invalid_argument("pixel buffer holds " + std::to_string(data_.size()) +
                                " values, expected " + std::to_string(width * height));
  }
  check_finite();
}

double GrayImage::clamped(long row, long col) const {
  const long r = std::clamp(row, 0L, static_cast<long>(height_) - 1);
  const long c = std::clamp(col, 0L, static_cast<long>(width_) - 1);
  return data_[static_cast<std::size_t>(r) * width_ + static_cast<std::size_t>(c)];
}

double GrayImage::min() const { return *std::min_element(data_.begin(), data_.end()); }

double GrayImage::max() const { return *std::max_element(data_.begin(), data_.end()); }

double GrayImage::mean() const {
  return std::accumulate(data_.begin(), data_.end(), 0.0) / static_cast<double>(data_.size());
}

void GrayImage::check_finite() const {
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i])) {
      throw std::domain_error("non-finite pixel at index " + std::to_string(i));
    }
  }
}

}  // namespace moire
