#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace moire {

/// Row-major grid of real intensities. Nominal range is [0, 255], but values
/// are allowed to leave it mid-pipeline; clamping happens only on export.
class GrayImage {
 public:
  /// Zero-filled image. Throws std::invalid_argument on a zero dimension.
  GrayImage(std::size_t width, std::size_t height, double fill = 0.0);

  /// Takes ownership of `data`; its size must equal width * height and every
  /// value must be finite.
  GrayImage(std::size_t width, std::size_t height, std::vector<double> data);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return data_.size(); }

  double at(std::size_t row, std::size_t col) const { return data_[row * width_ + col]; }
  double& at(std::size_t row, std::size_t col) { return data_[row * width_ + col]; }

  /// Replicate-padded access: coordinates are clamped into the grid.
  double clamped(long row, long col) const;

  std::span<const double> pixels() const { return data_; }
  std::span<double> pixels() { return data_; }

  bool same_shape(const GrayImage& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  double min() const;
  double max() const;
  double mean() const;

  /// Throws std::domain_error if any pixel is NaN or infinite.
  void check_finite() const;

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<double> data_;
};

}  // namespace moire
