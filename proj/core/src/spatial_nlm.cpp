#include <cmath>
#include <stdexcept>

#include "moire/spatial.hpp"

namespace moire {

namespace {

void validate(const NlmParams& p) {
  if (!(p.h > 0.0)) throw std::invalid_argument("NLM h must be positive");
  if (p.patch_radius < 1) throw std::invalid_argument("NLM patch_radius must be >= 1");
  if (p.search_radius < p.patch_radius) {
    throw std::invalid_argument("NLM search_radius must be >= patch_radius");
  }
}

// Replicate-padded copy so the inner loops index without clamping.
class Padded {
 public:
  Padded(const GrayImage& img, int pad)
      : pad_(pad), stride_(img.width() + 2 * static_cast<std::size_t>(pad)) {
    data_.resize(stride_ * (img.height() + 2 * static_cast<std::size_t>(pad)));
    for (long r = -pad; r < static_cast<long>(img.height()) + pad; ++r) {
      for (long c = -pad; c < static_cast<long>(img.width()) + pad; ++c) {
        data_[static_cast<std::size_t>(r + pad) * stride_ + static_cast<std::size_t>(c + pad)] =
            img.clamped(r, c);
      }
    }
  }

  double operator()(long r, long c) const {
    return data_[static_cast<std::size_t>(r + pad_) * stride_ + static_cast<std::size_t>(c + pad_)];
  }

 private:
  int pad_;
  std::size_t stride_;
  std::vector<double> data_;
};

class NlmKernel {
 public:
  NlmKernel(const GrayImage& img, const NlmParams& p)
      : p_(p), padded_(img, p.search_radius + p.patch_radius) {
    const double sigma = p.patch_radius / 2.0;
    double total = 0.0;
    for (int dr = -p.patch_radius; dr <= p.patch_radius; ++dr) {
      for (int dc = -p.patch_radius; dc <= p.patch_radius; ++dc) {
        const double g = std::exp(-(dr * dr + dc * dc) / (2.0 * sigma * sigma));
        patch_weights_.push_back(g);
        total += g;
      }
    }
    for (auto& g : patch_weights_) g /= total;
  }

  // Unnormalized weights exp(-D/h^2) over the search window; returns Z.
  double raw_weights(long row, long col, std::vector<double>& out) const {
    out.clear();
    const double inv_h2 = 1.0 / (p_.h * p_.h);
    double z = 0.0;
    for (long sr = -p_.search_radius; sr <= p_.search_radius; ++sr) {
      for (long sc = -p_.search_radius; sc <= p_.search_radius; ++sc) {
        double distance = 0.0;
        std::size_t k = 0;
        for (long dr = -p_.patch_radius; dr <= p_.patch_radius; ++dr) {
          for (long dc = -p_.patch_radius; dc <= p_.patch_radius; ++dc, ++k) {
            const double d = padded_(row + dr, col + dc) - padded_(row + sr + dr, col + sc + dc);
            distance += patch_weights_[k] * d * d;
          }
        }
        const double w = std::exp(-distance * inv_h2);
        out.push_back(w);
        z += w;
      }
    }
    return z;
  }

  double value(long row, long col, long offset_index) const {
    const long side = 2L * p_.search_radius + 1;
    return padded_(row + offset_index / side - p_.search_radius,
                   col + offset_index % side - p_.search_radius);
  }

 private:
  NlmParams p_;
  Padded padded_;
  std::vector<double> patch_weights_;
};

}  // namespace

std::vector<double> nlm_weights(const GrayImage& img, const NlmParams& p, std::size_t row,
                                std::size_t col) {
  validate(p);
  if (row >= img.height() || col >= img.width()) throw std::out_of_range("pixel outside image");
  const NlmKernel kernel(img, p);
  std::vector<double> weights;
  const double z = kernel.raw_weights(static_cast<long>(row), static_cast<long>(col), weights);
  for (auto& w : weights) w /= z;
  return weights;
}

GrayImage nlm_denoise(const GrayImage& img, const NlmParams& p) {
  validate(p);
  const NlmKernel kernel(img, p);
  GrayImage out(img.width(), img.height());
  std::vector<double> weights;
  for (std::size_t r = 0; r < img.height(); ++r) {
    for (std::size_t c = 0; c < img.width(); ++c) {
      const auto row = static_cast<long>(r);
      const auto col = static_cast<long>(c);
      const double z = kernel.raw_weights(row, col, weights);
      const double center = img.at(r, c);
      double acc = 0.0;
      for (std::size_t k = 0; k < weights.size(); ++k) {
        acc += weights[k] * (kernel.value(row, col, static_cast<long>(k)) - center);
      }
      out.at(r, c) = center + acc / z;
    }
  }
  return out;
}

}  // namespace moire
