#include "moire/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <locale>
#include <sstream>
#include <string>
#include <tuple>

namespace moire {

namespace {

long wrap(long i, long n) {
  const long r = i % n;
  return r < 0 ? r + n : r;
}

// Squared Euclidean distance on the torus.
long periodic_dist2(long du, long dv, long h, long w) {
  du = std::abs(du) % h;
  dv = std::abs(dv) % w;
  du = std::min(du, h - du);
  dv = std::min(dv, w - dv);
  return du * du + dv * dv;
}

PeakSet symmetrized(const Spectrum& spec, PeakSet peaks) {
  const std::size_t n = peaks.peaks.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = peaks.peaks[i];
    const std::size_t mu = spec.mirror_row(p.u);
    const std::size_t mv = spec.mirror_col(p.v);
    if (!peaks.contains(mu, mv)) peaks.peaks.push_back({mu, mv, std::abs(spec.at(mu, mv))});
  }
  std::sort(peaks.peaks.begin(), peaks.peaks.end(),
            [](const Peak& a, const Peak& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return peaks;
}

void require_centered(const Spectrum& spec, std::string_view op) {
  if (!spec.centered()) {
    throw std::invalid_argument(std::string(op) + " expects a centered spectrum");
  }
}

// True when the median of the annulus around (u, v) is below `level`.
// Counting samples under `level` settles almost every bin without a
// selection; only an exact tie at the middle falls back to the median.
bool exceeds_background(const std::vector<double>& mag, long u, long v, long h, long w,
                        double level, std::vector<double>& ring) {
  constexpr long outer = kAnnulusSide / 2;
  constexpr long inner = kAnnulusCore / 2;
  constexpr long total = kAnnulusSide * kAnnulusSide - kAnnulusCore * kAnnulusCore;
  constexpr long half = total / 2;
  long below = 0;
  long seen = 0;
  ring.clear();
  for (long du = -outer; du <= outer; ++du) {
    const long row = wrap(u + du, h) * w;
    for (long dv = -outer; dv <= outer; ++dv) {
      if (std::abs(du) <= inner && std::abs(dv) <= inner) continue;
      const double x = mag[static_cast<std::size_t>(row + wrap(v + dv, w))];
      ring.push_back(x);
      ++seen;
      if (x < level) ++below;
      // More than half the samples at or above `level` puts the median there.
      if (seen - below > total - half) return false;
    }
  }
  if (below > half) return true;
  if (below < half) return false;
  return level > median_inplace(ring);
}

// Streaks through the spectrum (image borders, straight edges) lift whole
// rows or columns, so the square annulus alone flags them. A bin must also
// stand out from the row and column segments through it.
bool exceeds_line_background(const std::vector<double>& mag, long u, long v, long h, long w,
                             double level, std::vector<double>& line) {
  constexpr long outer = kAnnulusSide / 2;
  constexpr long inner = kAnnulusCore / 2;
  for (const bool along_row : {true, false}) {
    line.clear();
    for (long d = -outer; d <= outer; ++d) {
      if (std::abs(d) <= inner) continue;
      const long row = along_row ? u : wrap(u + d, h);
      const long col = along_row ? wrap(v + d, w) : v;
      line.push_back(mag[static_cast<std::size_t>(row * w + col)]);
    }
    if (!(level > median_inplace(line))) return false;
  }
  return true;
}

}  // namespace

bool PeakSet::contains(std::size_t u, std::size_t v) const {
  return std::any_of(peaks.begin(), peaks.end(),
                     [&](const Peak& p) { return p.u == u && p.v == v; });
}

RepairParams RepairParams::for_size(std::size_t width, std::size_t height) {
  RepairParams p;
  const double side = static_cast<double>(std::min(width, height));
  p.guard_dc_radius = std::max(8, static_cast<int>(std::ceil(0.02 * side)));
  return p;
}

void RepairParams::validate() const {
  if (repair_radius < 1) throw std::invalid_argument("repair_radius must be >= 1");
  if (window < 3 || window % 2 == 0) throw std::invalid_argument("window must be odd and >= 3");
  if (guard_dc_radius < 0) throw std::invalid_argument("guard_dc_radius must be >= 0");
  if (!(detect_threshold > 1.0)) throw std::invalid_argument("detect_threshold must be > 1");
  const int half = window / 2;
  int inside = 0;
  for (int du = -half; du <= half; ++du) {
    for (int dv = -half; dv <= half; ++dv) {
      if (du * du + dv * dv <= repair_radius * repair_radius) ++inside;
    }
  }
  if (window * window - inside < static_cast<int>(kMinDonors)) {
    throw std::invalid_argument("window " + std::to_string(window) +
                                " leaves fewer than 5 donors around a repair disk of radius " +
                                std::to_string(repair_radius) + "; use a larger window");
  }
}

double median_inplace(std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("median of an empty sample");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<long>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<long>(mid));
  return 0.5 * (lower + upper);
}

PeakSet detect_peaks(const Spectrum& spec, const RepairParams& params) {
  require_centered(spec, "detect_peaks");
  params.validate();
  const auto h = static_cast<long>(spec.height());
  const auto w = static_cast<long>(spec.width());
  if (spec.height() < kMinDetectSide || spec.width() < kMinDetectSide) {
    throw std::invalid_argument(
        "spectrum " + std::to_string(w) + "x" + std::to_string(h) +
        " is too small for peak detection (needs at least 16x16 for the 21x21 background "
        "annulus); use a larger image or lower repair_radius/window");
  }

  std::vector<double> mag(spec.size());
  std::transform(spec.bins().begin(), spec.bins().end(), mag.begin(),
                 [](const Complex& s) { return std::abs(s); });
  // Rounding residue of an exact transform must never register as an impulse.
  const double floor = 1e-9 * *std::max_element(mag.begin(), mag.end());

  const long cu = static_cast<long>(spec.dc_row());
  const long cv = static_cast<long>(spec.dc_col());
  const long guard2 = static_cast<long>(params.guard_dc_radius) * params.guard_dc_radius;

  std::vector<Peak> candidates;
  std::vector<double> ring;
  ring.reserve(kAnnulusSide * kAnnulusSide);
  for (long u = 0; u < h; ++u) {
    for (long v = 0; v < w; ++v) {
      const double m = mag[static_cast<std::size_t>(u * w + v)];
      if (m <= floor) continue;
      if (periodic_dist2(u - cu, v - cv, h, w) <= guard2) continue;
      if (exceeds_background(mag, u, v, h, w, m / params.detect_threshold, ring) &&
          exceeds_line_background(mag, u, v, h, w, m / (kLineThresholdFraction * params.detect_threshold),
                                  ring)) {
        candidates.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v), m});
      }
    }
  }

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Peak& a, const Peak& b) { return a.magnitude > b.magnitude; });
  const long radius2 = static_cast<long>(params.repair_radius) * params.repair_radius;
  PeakSet kept;
  for (const auto& c : candidates) {
    const bool suppressed = std::any_of(kept.peaks.begin(), kept.peaks.end(), [&](const Peak& k) {
      return periodic_dist2(static_cast<long>(c.u) - static_cast<long>(k.u),
                            static_cast<long>(c.v) - static_cast<long>(k.v), h, w) <= radius2;
    });
    if (!suppressed) kept.peaks.push_back(c);
  }
  return symmetrized(spec, std::move(kept));
}

std::vector<bool> contamination_mask(const Spectrum& spec, const PeakSet& peaks,
                                     const RepairParams& params) {
  const auto h = static_cast<long>(spec.height());
  const auto w = static_cast<long>(spec.width());
  const long r = params.repair_radius;
  std::vector<bool> mask(spec.size(), false);
  for (const auto& p : symmetrized(spec, peaks).peaks) {
    for (long du = -r; du <= r; ++du) {
      for (long dv = -r; dv <= r; ++dv) {
        if (du * du + dv * dv > r * r) continue;
        const long u = wrap(static_cast<long>(p.u) + du, h);
        const long v = wrap(static_cast<long>(p.v) + dv, w);
        mask[static_cast<std::size_t>(u * w + v)] = true;
      }
    }
  }
  mask[spec.dc_row() * spec.width() + spec.dc_col()] = false;
  return mask;
}

Spectrum notch_reject(const Spectrum& spec, const PeakSet& peaks, const RepairParams& params) {
  require_centered(spec, "notch_reject");
  params.validate();
  Spectrum out = spec;
  if (peaks.empty()) return out;
  const auto mask = contamination_mask(spec, peaks, params);
  auto bins = out.bins();
  for (std::size_t i = 0; i < bins.size(); ++i) {
    if (mask[i]) bins[i] = Complex(0.0, 0.0);
  }
  return out;
}

Spectrum spectral_median(const Spectrum& spec, const PeakSet& peaks, const RepairParams& params) {
  require_centered(spec, "spectral_median");
  params.validate();
  Spectrum out = spec;
  if (peaks.empty()) return out;

  const auto h = static_cast<long>(spec.height());
  const auto w = static_cast<long>(spec.width());
  const auto mask = contamination_mask(spec, peaks, params);
  const std::size_t dc = spec.dc_row() * spec.width() + spec.dc_col();
  const long half = params.window / 2;

  // Estimates are computed from the input only, so the visiting order of
  // contaminated bins cannot influence the result.
  std::vector<Complex> estimate(spec.size());
  std::vector<double> magnitudes;
  std::vector<double> re;
  std::vector<double> im;
  for (long u = 0; u < h; ++u) {
    for (long v = 0; v < w; ++v) {
      const auto idx = static_cast<std::size_t>(u * w + v);
      if (!mask[idx]) continue;
      magnitudes.clear();
      for (long du = -half; du <= half; ++du) {
        for (long dv = -half; dv <= half; ++dv) {
          const auto donor = static_cast<std::size_t>(wrap(u + du, h) * w + wrap(v + dv, w));
          if (mask[donor] || donor == dc) continue;
          magnitudes.push_back(std::abs(spec.bins()[donor]));
        }
      }
      if (magnitudes.size() < kMinDonors) {
        throw RepairError("bin (" + std::to_string(u) + "," + std::to_string(v) + ") has only " +
                          std::to_string(magnitudes.size()) +
                          " uncontaminated donors; increase the median window");
      }
      const Complex own = spec.bins()[idx];
      const double own_magnitude = std::abs(own);
      if (own_magnitude > 0.0) {
        estimate[idx] = own * (median_inplace(magnitudes) / own_magnitude);
        continue;
      }
      // A bin with no phase of its own takes the component-wise median.
      re.clear();
      im.clear();
      for (long du = -half; du <= half; ++du) {
        for (long dv = -half; dv <= half; ++dv) {
          const auto donor = static_cast<std::size_t>(wrap(u + du, h) * w + wrap(v + dv, w));
          if (mask[donor] || donor == dc) continue;
          re.push_back(spec.bins()[donor].real());
          im.push_back(spec.bins()[donor].imag());
        }
      }
      estimate[idx] = Complex(median_inplace(re), median_inplace(im));
    }
  }

  auto bins = out.bins();
  for (std::size_t u = 0; u < spec.height(); ++u) {
    for (std::size_t v = 0; v < spec.width(); ++v) {
      const std::size_t idx = u * spec.width() + v;
      if (!mask[idx]) continue;
      const std::size_t partner = spec.mirror_row(u) * spec.width() + spec.mirror_col(v);
      bins[idx] = 0.5 * (estimate[idx] + std::conj(estimate[partner]));
    }
  }
  return out;
}

MoireDenoiseResult denoise_moire(const GrayImage& img, RepairMethod method,
                                 const RepairParams& params) {
  const Spectrum centered = center_shift(dft2d(img));
  PeakSet peaks = detect_peaks(centered, params);
  const Spectrum repaired = method == RepairMethod::kNotch
                                ? notch_reject(centered, peaks, params)
                                : spectral_median(centered, peaks, params);
  return {idft2d(center_shift(repaired)), std::move(peaks)};
}

void write_peaks_csv(std::ostream& out, const PeakSet& peaks) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << "u,v,magnitude\n" << std::fixed << std::setprecision(6);
  for (const auto& p : peaks.peaks) os << p.u << ',' << p.v << ',' << p.magnitude << '\n';
  out << os.str();
}

}  // namespace moire
