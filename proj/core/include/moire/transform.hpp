#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "moire/image.hpp"

namespace moire {

using Complex = std::complex<double>;

/// Row-major grid of complex frequency bins. Row index is the vertical
/// frequency u, column index the horizontal frequency v. When `centered` is
/// set, DC sits at (height/2, width/2) (integer division).
class Spectrum {
 public:
  Spectrum(std::size_t width, std::size_t height, bool centered = false);
  Spectrum(std::size_t width, std::size_t height, std::vector<Complex> data, bool centered);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return data_.size(); }
  bool centered() const { return centered_; }

  /// Row/column of the DC bin under the current layout.
  std::size_t dc_row() const { return centered_ ? height_ / 2 : 0; }
  std::size_t dc_col() const { return centered_ ? width_ / 2 : 0; }

  Complex at(std::size_t u, std::size_t v) const { return data_[u * width_ + v]; }
  Complex& at(std::size_t u, std::size_t v) { return data_[u * width_ + v]; }

  /// Periodic access: indices are reduced modulo the grid size.
  Complex wrapped(long u, long v) const;

  /// Index of the Hermitian partner of (u, v), i.e. the bin holding -f,
  /// respecting the current layout.
  std::size_t mirror_row(std::size_t u) const;
  std::size_t mirror_col(std::size_t v) const;

  std::span<const Complex> bins() const { return data_; }
  std::span<Complex> bins() { return data_; }

  /// Sum of |S|^2 over all bins.
  double energy() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  bool centered_;
  std::vector<Complex> data_;
};

/// Raised by idft2d when the inverse has a significant imaginary component,
/// which means an upstream spectral edit broke Hermitian symmetry.
class SymmetryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// idft2d accepts an imaginary residue up to
/// max(kImagResidueTolerance * max|real|, kImagResidueFloor).
inline constexpr double kImagResidueTolerance = 1e-6;
inline constexpr double kImagResidueFloor = 1e-9;

/// Unnormalized forward DFT of a real image; the result is not centered.
Spectrum dft2d(const GrayImage& img);

/// Normalized (1/(H*W)) inverse DFT returning the real part. The spectrum must
/// not be centered. Throws SymmetryError if max|imag| > 1e-6 * max|real|.
GrayImage idft2d(const Spectrum& spec);

/// Complex inverse without the realness check (normalized).
std::vector<Complex> idft2d_complex(const Spectrum& spec);

/// Swaps quadrants to move DC to the center or back, toggling `centered`.
/// Always its own inverse because the direction follows the flag.
Spectrum center_shift(const Spectrum& spec);

/// log(1 + |S|) linearly rescaled to [0, 255]; a constant-magnitude spectrum
/// maps to all zeros.
GrayImage log_magnitude(const Spectrum& spec);

/// Largest |S(u,v) - conj(S(-u,-v))| relative to the largest |S|.
double hermitian_defect(const Spectrum& spec);

}  // namespace moire
