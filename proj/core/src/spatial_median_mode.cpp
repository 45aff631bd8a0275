#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "moire/spatial.hpp"

namespace moire {

namespace {

void require_odd_window(int window, int minimum) {
  if (window < minimum || window % 2 == 0) {
    throw std::invalid_argument("window must be an odd integer >= " + std::to_string(minimum) +
                                ", got " +
                                std::to_string(window));
  }
}

void gather(const GrayImage& img, long row, long col, int half, std::vector<double>& out) {
  out.clear();
  for (long dr = -half; dr <= half; ++dr) {
    for (long dc = -half; dc <= half; ++dc) out.push_back(img.clamped(row + dr, col + dc));
  }
}

}  // namespace

GrayImage median_filter(const GrayImage& img, const MedianParams& p) {
  require_odd_window(p.window, 3);
  const int half = p.window / 2;
  GrayImage out(img.width(), img.height());
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(p.window) * p.window);
  const auto mid = static_cast<long>(samples.capacity() / 2);
  for (std::size_t r = 0; r < img.height(); ++r) {
    for (std::size_t c = 0; c < img.width(); ++c) {
      gather(img, static_cast<long>(r), static_cast<long>(c), half, samples);
      std::nth_element(samples.begin(), samples.begin() + mid, samples.end());
      out.at(r, c) = samples[static_cast<std::size_t>(mid)];
    }
  }
  return out;
}

double neighborhood_mode(const std::vector<double>& samples, double center, ModeKind kind,
                         double bin_width) {
  if (samples.empty()) throw std::invalid_argument("mode of an empty neighborhood");
  if (kind == ModeKind::kGlobal) {
    struct Bin {
      std::size_t count = 0;
      double sum = 0.0;
    };
    std::map<long, Bin> histogram;
    for (double s : samples) {
      auto& bin = histogram[static_cast<long>(std::floor(s / bin_width))];
      ++bin.count;
      bin.sum += s - center;
    }
    auto best = histogram.begin();
    double best_gap = std::abs((static_cast<double>(best->first) + 0.5) * bin_width - center);
    for (auto it = std::next(histogram.begin()); it != histogram.end(); ++it) {
      const double gap = std::abs((static_cast<double>(it->first) + 0.5) * bin_width - center);
      if (it->second.count > best->second.count ||
          (it->second.count == best->second.count && gap < best_gap)) {
        best = it;
        best_gap = gap;
      }
    }
    return center + best->second.sum / static_cast<double>(best->second.count);
  }

  double estimate = center;
  for (int iter = 0; iter < 50; ++iter) {
    double sum = 0.0;
    std::size_t count = 0;
    for (double s : samples) {
      if (std::abs(s - estimate) <= bin_width) {
        sum += s - center;
        ++count;
      }
    }
    if (count == 0) break;
    const double next = center + sum / static_cast<double>(count);
    const double moved = std::abs(next - estimate);
    estimate = next;
    if (moved < 1e-3) break;
  }
  return estimate;
}

GrayImage mode_filter(const GrayImage& img, const ModeParams& p) {
  require_odd_window(p.window, 1);
  if (!(p.bin_width > 0.0)) throw std::invalid_argument("bin_width must be positive");
  const int half = p.window / 2;
  GrayImage out(img.width(), img.height());
  std::vector<double> samples;
  for (std::size_t r = 0; r < img.height(); ++r) {
    for (std::size_t c = 0; c < img.width(); ++c) {
      gather(img, static_cast<long>(r), static_cast<long>(c), half, samples);
      out.at(r, c) = neighborhood_mode(samples, img.at(r, c), p.kind, p.bin_width);
    }
  }
  return out;
}

}  // namespace moire
