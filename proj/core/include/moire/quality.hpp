#pragma once

#include <compare>
#include <string>

#include "moire/image.hpp"

namespace moire {

/// PSNR in decibels with an explicit sentinel for identical images, so an
/// infinite ratio never enters floating-point arithmetic.
class PsnrDb {
 public:
  static PsnrDb infinite() { return PsnrDb(true, 0.0); }
  static PsnrDb finite(double db) { return PsnrDb(false, db); }

  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error on the infinite sentinel.
  double value() const;

  /// "inf" or the value with two decimals, dot separator regardless of locale.
  std::string to_string() const;

  friend std::partial_ordering operator<=>(const PsnrDb& a, const PsnrDb& b);
  friend bool operator==(const PsnrDb& a, const PsnrDb& b) = default;

 private:
  PsnrDb(bool infinite, double db) : infinite_(infinite), db_(db) {}
  bool infinite_;
  double db_;
};

struct QualityReport {
  double mse = 0.0;
  PsnrDb psnr_db = PsnrDb::infinite();
  double peak_value = 255.0;
};

inline constexpr double kPeakValue = 255.0;

/// Mean squared error over all pixels. Throws std::invalid_argument when the
/// shapes differ.
double mse(const GrayImage& a, const GrayImage& b);

/// 10*log10(255^2 / mse), or the infinite sentinel when mse is zero.
QualityReport psnr(const GrayImage& a, const GrayImage& b);

/// Converts an MSE into PSNR against the fixed 8-bit peak.
PsnrDb psnr_from_mse(double mse);

/// Formats a double with `decimals` digits using the C locale.
std::string format_fixed(double value, int decimals);

}  // namespace moire
