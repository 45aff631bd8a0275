#include "moire/quality.hpp"

#include <cmath>
#include <iomanip>
#include <locale>
#include <sstream>
#include <stdexcept>

namespace moire {

double PsnrDb::value() const {
  if (infinite_) throw std::logic_error("PSNR is infinite (identical images)");
  return db_;
}

std::string PsnrDb::to_string() const { return infinite_ ? "inf" : format_fixed(db_, 2); }

std::partial_ordering operator<=>(const PsnrDb& a, const PsnrDb& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return a.db_ <=> b.db_;
}

double mse(const GrayImage& a, const GrayImage& b) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.width()) + "x" +
                                std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
                                "x" + std::to_string(b.height()));
  }
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  double sum = 0.0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const double d = pa[i] - pb[i];
    sum += d * d;
  }
  return sum / static_cast<double>(pa.size());
}

PsnrDb psnr_from_mse(double value) {
  if (value < 0.0 || !std::isfinite(value)) throw std::domain_error("MSE must be finite and >= 0");
  if (value == 0.0) return PsnrDb::infinite();
  return PsnrDb::finite(10.0 * std::log10(kPeakValue * kPeakValue / value));
}

QualityReport psnr(const GrayImage& a, const GrayImage& b) {
  QualityReport report;
  report.mse = mse(a, b);
  report.psnr_db = psnr_from_mse(report.mse);
  report.peak_value = kPeakValue;
  return report;
}

std::string format_fixed(double value, int decimals) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(decimals) << value;
  return os.str();
}

}  // namespace moire
