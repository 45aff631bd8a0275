#pragma once

#include <cstddef>
#include <vector>

#include "moire/image.hpp"

namespace moire {

// Classical spatial-domain denoisers used as baselines. Every filter reads
// borders through replicate padding and returns a new image.

struct MedianParams {
  int window = 3;
};

/// Median of each window x window neighborhood. Throws std::invalid_argument
/// for an even or non-positive window.
GrayImage median_filter(const GrayImage& img, const MedianParams& p);

enum class ModeKind { kGlobal, kLocal };

struct ModeParams {
  int window = 5;
  ModeKind kind = ModeKind::kLocal;
  double bin_width = 8.0;
};

/// Global mode: mean of the neighborhood samples falling in the most
/// populated histogram bin (bins are [k*bin_width, (k+1)*bin_width), ties go
/// to the bin whose center is closest to the center pixel).
/// Local mode: starting from the center pixel, repeatedly move to the mean of
/// the samples within +-bin_width of the estimate, until it moves less than
/// 1e-3 or 50 iterations have run.
GrayImage mode_filter(const GrayImage& img, const ModeParams& p);

/// Mode of a single neighborhood sample; `center` is the center pixel value.
double neighborhood_mode(const std::vector<double>& samples, double center, ModeKind kind,
                         double bin_width);

struct BilateralParams {
  double sigma_s = 2.0;
  double sigma_r = 25.0;

  /// Window half-width, ceil(3 * sigma_s).
  int radius() const;
};

/// G_sigma(x) = exp(-x^2 / (2 sigma^2)) / (2 pi sigma^2).
double gaussian_kernel(double x, double sigma);

/// Weighted average with spatial weight G_{sigma_s}(|p-q|) and range weight
/// G_{sigma_r}(|I_p - I_q|), normalized per pixel.
GrayImage bilateral_filter(const GrayImage& img, const BilateralParams& p);

enum class Conductance { kExponential, kRational };

struct DiffusionParams {
  double k = 15.0;
  double lambda = 0.25;
  int iterations = 20;
  Conductance conductance = Conductance::kExponential;
};

/// Edge-stopping function: exp(-|g|/K) or 1 / (1 + (|g|/K)^2).
double conductance(double gradient, double k, Conductance kind);

/// Explicit Perona-Malik scheme over the four one-sided differences with
/// reflecting (zero-flux) boundaries. lambda must lie in (0, 0.25].
GrayImage anisotropic_diffusion(const GrayImage& img, const DiffusionParams& p);

struct TvParams {
  double lambda = 0.1;   // fidelity weight
  double step = 0.1;
  int iterations = 100;
  double epsilon = 1e-6;
};

/// Discrete total variation sum sqrt(|grad u|^2 + eps^2) with forward
/// differences and zero gradient past the last row/column.
double total_variation(const GrayImage& u, double epsilon);

/// TV(u) + (lambda/2) * sum (u - u0)^2.
double tv_energy(const GrayImage& u, const GrayImage& u0, const TvParams& p);

/// Minimizes tv_energy by gradient descent: an explicit step on the TV term
/// and an exact proximal step on the quadratic fidelity term. The nominal
/// step is halved until the energy does not increase, so the energy sequence
/// is monotone. `energies`, when given, receives F(u_k) for k = 0..iterations.
GrayImage tv_denoise(const GrayImage& img, const TvParams& p,
                     std::vector<double>* energies = nullptr);

struct NlmParams {
  double h = 10.0;
  int patch_radius = 3;
  int search_radius = 10;
};

/// Non-local means: each pixel is the weighted mean of the search window,
/// weights exp(-D/h^2) normalized to sum to one, where D is the
/// Gaussian-weighted (sigma = patch_radius / 2) mean squared difference of
/// the two patches.
GrayImage nlm_denoise(const GrayImage& img, const NlmParams& p);

/// Normalized weights of pixel (row, col) over its search window, row-major
/// over offsets (-search_radius..search_radius)^2.
std::vector<double> nlm_weights(const GrayImage& img, const NlmParams& p, std::size_t row,
                                std::size_t col);

}  // namespace moire
