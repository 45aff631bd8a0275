#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "moire/spatial.hpp"

namespace moire {

// ---------------------------------------------------------------- bilateral

int BilateralParams::radius() const { return static_cast<int>(std::ceil(3.0 * sigma_s)); }

double gaussian_kernel(double x, double sigma) {
  return std::exp(-(x * x) / (2.0 * sigma * sigma)) / (2.0 * std::numbers::pi * sigma * sigma);
}

GrayImage bilateral_filter(const GrayImage& img, const BilateralParams& p) {
  if (!(p.sigma_s > 0.0) || !(p.sigma_r > 0.0)) {
    throw std::invalid_argument("bilateral sigmas must be positive");
  }
  const int radius = p.radius();
  const int side = 2 * radius + 1;
  std::vector<double> spatial(static_cast<std::size_t>(side) * side);
  for (int dr = -radius; dr <= radius; ++dr) {
    for (int dc = -radius; dc <= radius; ++dc) {
      spatial[static_cast<std::size_t>((dr + radius) * side + dc + radius)] =
          gaussian_kernel(std::hypot(dr, dc), p.sigma_s);
    }
  }
  GrayImage out(img.width(), img.height());
  for (std::size_t r = 0; r < img.height(); ++r) {
    for (std::size_t c = 0; c < img.width(); ++c) {
      const double center = img.at(r, c);
      double num = 0.0;
      double norm = 0.0;
      for (int dr = -radius; dr <= radius; ++dr) {
        for (int dc = -radius; dc <= radius; ++dc) {
          const double q = img.clamped(static_cast<long>(r) + dr, static_cast<long>(c) + dc);
          const double weight = spatial[static_cast<std::size_t>((dr + radius) * side + dc + radius)] *
                                gaussian_kernel(center - q, p.sigma_r);
          num += weight * (q - center);
          norm += weight;
        }
      }
      // Accumulating offsets from the center keeps flat regions bit-exact.
      out.at(r, c) = center + num / norm;
    }
  }
  return out;
}

// ---------------------------------------------------------------- diffusion

double conductance(double gradient, double k, Conductance kind) {
  const double g = std::abs(gradient) / k;
  return kind == Conductance::kExponential ? std::exp(-g) : 1.0 / (1.0 + g * g);
}

GrayImage anisotropic_diffusion(const GrayImage& img, const DiffusionParams& p) {
  if (!(p.lambda > 0.0 && p.lambda <= 0.25)) {
    throw std::invalid_argument("diffusion lambda must lie in (0, 0.25]");
  }
  if (!(p.k > 0.0)) throw std::invalid_argument("diffusion K must be positive");
  if (p.iterations < 0) throw std::invalid_argument("iterations must be >= 0");

  const std::size_t h = img.height();
  const std::size_t w = img.width();
  GrayImage current = img;
  GrayImage next = img;
  for (int it = 0; it < p.iterations; ++it) {
    for (std::size_t r = 0; r < h; ++r) {
      for (std::size_t c = 0; c < w; ++c) {
        const double here = current.at(r, c);
        // Missing neighbors contribute zero flux.
        const double north = r > 0 ? current.at(r - 1, c) - here : 0.0;
        const double south = r + 1 < h ? current.at(r + 1, c) - here : 0.0;
        const double east = c + 1 < w ? current.at(r, c + 1) - here : 0.0;
        const double west = c > 0 ? current.at(r, c - 1) - here : 0.0;
        const double flux = conductance(north, p.k, p.conductance) * north +
                            conductance(south, p.k, p.conductance) * south +
                            conductance(east, p.k, p.conductance) * east +
                            conductance(west, p.k, p.conductance) * west;
        next.at(r, c) = here + p.lambda * flux;
      }
    }
    std::swap(current, next);
  }
  return current;
}

// ---------------------------------------------------------- total variation

namespace {

void validate(const TvParams& p) {
  if (!(p.lambda > 0.0)) throw std::invalid_argument("TV lambda must be positive");
  if (!(p.step > 0.0)) throw std::invalid_argument("TV step must be positive");
  if (!(p.epsilon > 0.0)) throw std::invalid_argument("TV epsilon must be positive");
  if (p.iterations < 0) throw std::invalid_argument("iterations must be >= 0");
}

// Gradient of sum sqrt(|grad u|^2 + eps^2), forward differences.
std::vector<double> tv_gradient(const GrayImage& u, double epsilon) {
  const std::size_t h = u.height();
  const std::size_t w = u.width();
  std::vector<double> grad(u.size(), 0.0);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const double gx = c + 1 < w ? u.at(r, c + 1) - u.at(r, c) : 0.0;
      const double gy = r + 1 < h ? u.at(r + 1, c) - u.at(r, c) : 0.0;
      const double norm = std::sqrt(gx * gx + gy * gy + epsilon * epsilon);
      if (norm == 0.0) continue;
      const double nx = gx / norm;
      const double ny = gy / norm;
      grad[r * w + c] -= nx + ny;
      if (c + 1 < w) grad[r * w + c + 1] += nx;
      if (r + 1 < h) grad[(r + 1) * w + c] += ny;
    }
  }
  return grad;
}

}  // namespace

double total_variation(const GrayImage& u, double epsilon) {
  const std::size_t h = u.height();
  const std::size_t w = u.width();
  double sum = 0.0;
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const double gx = c + 1 < w ? u.at(r, c + 1) - u.at(r, c) : 0.0;
      const double gy = r + 1 < h ? u.at(r + 1, c) - u.at(r, c) : 0.0;
      sum += std::sqrt(gx * gx + gy * gy + epsilon * epsilon);
    }
  }
  return sum;
}

double tv_energy(const GrayImage& u, const GrayImage& u0, const TvParams& p) {
  double fidelity = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u.pixels()[i] - u0.pixels()[i];
    fidelity += d * d;
  }
  return total_variation(u, p.epsilon) + 0.5 * p.lambda * fidelity;
}

GrayImage tv_denoise(const GrayImage& img, const TvParams& p, std::vector<double>* energies) {
  validate(p);
  constexpr int kMaxHalvings = 40;
  GrayImage u = img;
  double energy = tv_energy(u, img, p);
  if (energies) {
    energies->clear();
    energies->push_back(energy);
  }
  GrayImage trial = img;
  for (int it = 0; it < p.iterations; ++it) {
    const auto grad = tv_gradient(u, p.epsilon);
    double step = p.step;
    bool accepted = false;
    for (int attempt = 0; attempt <= kMaxHalvings && !accepted; ++attempt, step *= 0.5) {
      // Explicit step on TV, then the closed-form prox of (lambda/2)|u - u0|^2
      // written as an increment so a stationary pixel stays bit-identical.
      const double shrink = step * p.lambda / (1.0 + step * p.lambda);
      for (std::size_t i = 0; i < u.size(); ++i) {
        const double half = u.pixels()[i] - step * grad[i];
        trial.pixels()[i] = half + shrink * (img.pixels()[i] - half);
      }
      const double trial_energy = tv_energy(trial, img, p);
      if (trial_energy <= energy) {
        std::swap(u, trial);
        energy = trial_energy;
        accepted = true;
      }
    }
    if (energies) energies->push_back(energy);
  }
  return u;
}

}  // namespace moire
