#include "fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace moire::detail {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

}  // namespace

void radix2(std::span<Complex> data, std::span<const Complex> twiddles,
            std::span<const std::size_t> bitrev, bool inverse) {
  const std::size_t m = data.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (i < bitrev[i]) std::swap(data[i], data[bitrev[i]]);
  }
  for (std::size_t len = 2; len <= m; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = m / len;
    for (std::size_t start = 0; start < m; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        Complex w = twiddles[k * stride];
        if (inverse) w = std::conj(w);
        const Complex a = data[start + k];
        const Complex b = data[start + k + half] * w;
        data[start + k] = a + b;
        data[start + k + half] = a - b;
      }
    }
  }
}

FftPlan::FftPlan(std::size_t n) : n_(n), pow2_(is_pow2(n)) {
  if (n == 0) throw std::invalid_argument("FFT length must be positive");
  m_ = pow2_ ? n : next_pow2(2 * n - 1);

  twiddles_.resize(m_ / 2 + 1);
  for (std::size_t k = 0; k < twiddles_.size(); ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m_);
    twiddles_[k] = Complex(std::cos(angle), std::sin(angle));
  }
  bitrev_.resize(m_);
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < m_) ++bits;
  for (std::size_t i = 0; i < m_; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b) r |= ((i >> b) & 1U) << (bits - 1 - b);
    bitrev_[i] = r;
  }
  if (pow2_) return;

  // k^2 is reduced mod 2n before scaling so the chirp angle stays accurate
  // for large k.
  chirp_.resize(n_);
  const std::size_t period = 2 * n_;
  for (std::size_t k = 0; k < n_; ++k) {
    const std::size_t k2 = (k * k) % period;
    const double angle = -std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n_);
    chirp_[k] = Complex(std::cos(angle), std::sin(angle));
  }
  kernel_fft_.assign(m_, Complex(0.0, 0.0));
  kernel_fft_[0] = std::conj(chirp_[0]);
  for (std::size_t k = 1; k < n_; ++k) {
    kernel_fft_[k] = std::conj(chirp_[k]);
    kernel_fft_[m_ - k] = std::conj(chirp_[k]);
  }
  radix2(kernel_fft_, twiddles_, bitrev_, false);
}

void FftPlan::forward(std::span<Complex> data) const { transform(data, false); }

void FftPlan::inverse(std::span<Complex> data) const { transform(data, true); }

void FftPlan::transform(std::span<Complex> data, bool inverse) const {
  if (data.size() != n_) throw std::invalid_argument("FFT buffer length mismatch");
  if (n_ == 1) return;
  if (pow2_) {
    radix2(data, twiddles_, bitrev_, inverse);
    return;
  }
  // The inverse DFT equals conj(forward(conj(x))).
  std::vector<Complex> work(m_, Complex(0.0, 0.0));
  for (std::size_t k = 0; k < n_; ++k) {
    const Complex x = inverse ? std::conj(data[k]) : data[k];
    work[k] = x * chirp_[k];
  }
  radix2(work, twiddles_, bitrev_, false);
  for (std::size_t k = 0; k < m_; ++k) work[k] *= kernel_fft_[k];
  radix2(work, twiddles_, bitrev_, true);
  const double scale = 1.0 / static_cast<double>(m_);
  for (std::size_t k = 0; k < n_; ++k) {
    const Complex y = work[k] * scale * chirp_[k];
    data[k] = inverse ? std::conj(y) : y;
  }
}

}  // namespace moire::detail
