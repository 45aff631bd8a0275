#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "moire/image.hpp"
#include "moire/transform.hpp"

namespace moire {

/// One detected impulse, in centered spectrum coordinates.
struct Peak {
  std::size_t u = 0;
  std::size_t v = 0;
  double magnitude = 0.0;

  friend bool operator==(const Peak&, const Peak&) = default;
};

/// Detected impulses, sorted by (u, v). Conjugate partners are always both
/// present.
struct PeakSet {
  std::vector<Peak> peaks;

  bool empty() const { return peaks.empty(); }
  std::size_t size() const { return peaks.size(); }
  bool contains(std::size_t u, std::size_t v) const;

  friend bool operator==(const PeakSet&, const PeakSet&) = default;
};

/// Geometry of detection and repair, all distances in bins.
struct RepairParams {
  /// Every bin within this Euclidean distance of a peak is re-estimated.
  int repair_radius = 3;
  /// Side of the square donor window used by the spectral median.
  int window = 9;
  /// Bins this close to DC are never reported as peaks.
  int guard_dc_radius = 8;
  /// A bin is an impulse when its magnitude exceeds this multiple of the
  /// median magnitude of its surrounding annulus.
  double detect_threshold = 10.0;

  /// Defaults with guard_dc_radius = max(8, ceil(0.02 * min(width, height))).
  static RepairParams for_size(std::size_t width, std::size_t height);

  /// Throws std::invalid_argument when a field is out of range or the window
  /// cannot leave at least five donors around a peak.
  void validate() const;
};

/// Side of the square neighborhood used for the detection background, and
/// the excluded core around the bin under test.
inline constexpr int kAnnulusSide = 21;
inline constexpr int kAnnulusCore = 5;
/// A candidate must also exceed detect_threshold * kLineThresholdFraction
/// times the median of the 21-bin row and column segments through it
/// (5-bin core removed). This rejects streaks from borders and edges.
inline constexpr double kLineThresholdFraction = 0.5;
/// Smallest image side accepted by detect_peaks.
inline constexpr std::size_t kMinDetectSide = 16;
/// Minimum number of uncontaminated samples a median estimate needs.
inline constexpr std::size_t kMinDonors = 5;

class RepairError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finds conjugate impulse pairs in a centered spectrum. A bin qualifies when
/// it lies outside the DC guard and its magnitude exceeds detect_threshold
/// times the median magnitude over the 21x21 annulus (5x5 core removed)
/// around it, and passes the row/column streak test above. Candidates are thinned by greedy non-maximum suppression within
/// repair_radius, and the result is completed with any missing mirrors.
/// Neighborhoods wrap around the spectrum edges.
PeakSet detect_peaks(const Spectrum& spec, const RepairParams& params);

/// Bins (row-major indices) within repair_radius of any peak of the
/// symmetrized set, excluding the DC bin. Distances wrap around the grid.
std::vector<bool> contamination_mask(const Spectrum& spec, const PeakSet& peaks,
                                     const RepairParams& params);

/// Ideal notch: zeroes every contaminated bin.
Spectrum notch_reject(const Spectrum& spec, const PeakSet& peaks, const RepairParams& params);

/// Median filter of the amplitude spectrum around the impulses. Each
/// contaminated bin keeps its phase and takes as magnitude the median
/// magnitude of the uncontaminated bins ("donors") in its window x window
/// neighborhood; a bin of exactly zero magnitude takes the component-wise
/// median of the donors instead. Each repaired bin is then averaged with the
/// conjugate of its mirror. Bins outside the contaminated set are left
/// bit-identical. Throws RepairError when a bin has fewer than five donors.
Spectrum spectral_median(const Spectrum& spec, const PeakSet& peaks, const RepairParams& params);

enum class RepairMethod { kNotch, kMedian };

struct MoireDenoiseResult {
  GrayImage image;
  PeakSet peaks;
};

/// dft2d -> center_shift -> detect_peaks -> repair -> center_shift -> idft2d.
MoireDenoiseResult denoise_moire(const GrayImage& img, RepairMethod method,
                                 const RepairParams& params);

/// "u,v,magnitude" header followed by one line per peak.
void write_peaks_csv(std::ostream& out, const PeakSet& peaks);

/// Median of a non-empty sample; the mean of the two middle values when the
/// count is even. Reorders `values`.
double median_inplace(std::vector<double>& values);

}  // namespace moire
