#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace moire::detail {

using Complex = std::complex<double>;

/// Precomputed 1D DFT of a fixed length. Power-of-two lengths use an
/// iterative radix-2 kernel; every other length goes through Bluestein's
/// chirp-z reformulation onto a power-of-two convolution. Both transforms are
/// unnormalized.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);

  std::size_t size() const { return n_; }

  /// X[k] = sum_j x[j] exp(-2*pi*i*j*k/n), in place.
  void forward(std::span<Complex> data) const;
  /// x[j] = sum_k X[k] exp(+2*pi*i*j*k/n), in place (no 1/n factor).
  void inverse(std::span<Complex> data) const;

 private:
  void transform(std::span<Complex> data, bool inverse) const;

  std::size_t n_;
  bool pow2_;
  // Radix-2 path: twiddles for the padded length m_ (m_ == n_ when pow2_).
  std::size_t m_;
  std::vector<Complex> twiddles_;
  std::vector<std::size_t> bitrev_;
  // Bluestein path.
  std::vector<Complex> chirp_;       // exp(-i*pi*k^2/n), k < n
  std::vector<Complex> kernel_fft_;  // FFT of conj(chirp) wrapped to length m_
};

/// Radix-2 FFT of a power-of-two sized buffer using the supplied tables.
void radix2(std::span<Complex> data, std::span<const Complex> twiddles,
            std::span<const std::size_t> bitrev, bool inverse);

}  // namespace moire::detail
