#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "moire/image.hpp"

namespace moire {

/// One sinusoidal interference term A*sin(2*pi*(fu*row + fv*col) + phase).
/// Frequencies are in cycles per pixel; fu runs down the rows, fv across.
struct MoireComponent {
  double amplitude = 0.0;
  double freq_u = 0.0;
  double freq_v = 0.0;
  double phase = 0.0;

  friend bool operator==(const MoireComponent&, const MoireComponent&) = default;
};

struct MoireSpec {
  std::vector<MoireComponent> components;

  /// Throws std::invalid_argument on a negative amplitude, a frequency beyond
  /// Nyquist (|f| > 0.5) or a non-finite field.
  void validate() const;

  friend bool operator==(const MoireSpec&, const MoireSpec&) = default;
};

/// Adds the moire pattern to `img`. The result is not clamped.
GrayImage synthesize_moire(const GrayImage& img, const MoireSpec& spec);

/// Adds i.i.d. N(0, sigma^2) noise. Each pixel's sample is a pure function of
/// (seed, pixel index), so the result does not depend on evaluation order.
GrayImage add_gaussian(const GrayImage& img, double sigma, std::uint64_t seed);

/// Replaces each pixel with probability `density` by 0 or 255 (even odds).
GrayImage add_salt_pepper(const GrayImage& img, double density, std::uint64_t seed);

/// Counter-based generator: SplitMix64 finalizer applied to seed and counter.
std::uint64_t hash_random(std::uint64_t seed, std::uint64_t counter);
/// Uniform double in [0, 1) with 53 random bits.
double hash_uniform(std::uint64_t seed, std::uint64_t counter);

/// CSV with one "amplitude,freq_u,freq_v,phase" line per component. Blank
/// lines, '#' comments and a literal header line are skipped. Throws
/// std::runtime_error naming the offending line.
MoireSpec parse_moire_csv(std::istream& in);
void write_moire_csv(std::ostream& out, const MoireSpec& spec);

struct NamedMoireSpec {
  std::string id;
  MoireSpec spec;
};

/// The six-entry default contamination corpus for an image with `height` rows
/// and `width` columns. Frequencies land on integer bins: (8,6), (12,0) and
/// (5,11) cycles per image; amplitudes 10, 20, 40; phases 0 and pi/3.
std::vector<NamedMoireSpec> default_moire_corpus(std::size_t width, std::size_t height);

}  // namespace moire
