#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "moire/noise.hpp"
#include "moire/spatial.hpp"
#include "support/oracles.hpp"

namespace moire {
namespace {

double variance(const GrayImage& img) {
  const double m = img.mean();
  double s = 0.0;
  for (double v : img.pixels()) s += (v - m) * (v - m);
  return s / static_cast<double>(img.size());
}

// Every output pixel must lie within the range of the replicate-padded
// (2*radius+1)^2 neighborhood it was computed from.
void expect_within_neighborhood(const GrayImage& in, const GrayImage& out, int radius,
                                const char* label) {
  for (std::size_t r = 0; r < in.height(); ++r) {
    for (std::size_t c = 0; c < in.width(); ++c) {
      double lo = INFINITY;
      double hi = -INFINITY;
      for (long dr = -radius; dr <= radius; ++dr) {
        for (long dc = -radius; dc <= radius; ++dc) {
          const double q = in.clamped(static_cast<long>(r) + dr, static_cast<long>(c) + dc);
          lo = std::min(lo, q);
          hi = std::max(hi, q);
        }
      }
      const double tol = 1e-9 * std::max(1.0, std::abs(hi));
      ASSERT_GE(out.at(r, c), lo - tol) << label << " at " << r << "," << c;
      ASSERT_LE(out.at(r, c), hi + tol) << label << " at " << r << "," << c;
    }
  }
}

// ------------------------------------------------------------------ median

TEST(MedianFilter, ConstantImageIsFixedPoint) {
  const GrayImage img(9, 7, 42.0);
  EXPECT_EQ(median_filter(img, {3}), img);
  EXPECT_EQ(median_filter(img, {7}), img);
}

TEST(MedianFilter, RemovesIsolatedImpulse) {
  GrayImage img(8, 8);
  img.at(3, 4) = 255.0;
  EXPECT_EQ(median_filter(img, {3}), GrayImage(8, 8));
}

TEST(MedianFilter, MatchesSortOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto img = testing::random_image(16, 16, seed);
    EXPECT_EQ(median_filter(img, {5}), testing::sort_median(img, 5)) << seed;
    const auto levels = testing::random_levels(13, 11, seed, 4);
    EXPECT_EQ(median_filter(levels, {3}), testing::sort_median(levels, 3)) << seed;
  }
}

TEST(MedianFilter, RejectsEvenOrTinyWindows) {
  EXPECT_THROW(median_filter(GrayImage(4, 4), {4}), std::invalid_argument);
  EXPECT_THROW(median_filter(GrayImage(4, 4), {1}), std::invalid_argument);
}

TEST(MedianFilter, StaysWithinNeighborhoodRange) {
  const auto img = testing::random_image(20, 15, 3);
  expect_within_neighborhood(img, median_filter(img, {5}), 2, "median");
}

// -------------------------------------------------------------------- mode

TEST(ModeFilter, ConstantImageBothKinds) {
  const GrayImage img(10, 6, 77.3);
  for (auto kind : {ModeKind::kGlobal, ModeKind::kLocal}) {
    EXPECT_EQ(mode_filter(img, {5, kind, 8.0}), img);
  }
}

TEST(ModeFilter, DominantBinWins) {
  std::vector<double> samples = {0, 0, 0, 0, 0, 0, 255, 255, 255};
  EXPECT_EQ(neighborhood_mode(samples, 255.0, ModeKind::kGlobal, 8.0), 0.0);
}

TEST(ModeFilter, BimodalNeighborhoodGlobalVersusLocal) {
  std::vector<double> samples(10, 50.0);
  samples.insert(samples.end(), 8, 200.0);
  EXPECT_NEAR(neighborhood_mode(samples, 190.0, ModeKind::kGlobal, 16.0), 50.0, 1e-12);
  EXPECT_NEAR(neighborhood_mode(samples, 190.0, ModeKind::kLocal, 16.0), 200.0, 1e-12);
  // At the default width the 200 cluster is out of reach of the center value.
  EXPECT_NEAR(neighborhood_mode(samples, 190.0, ModeKind::kLocal, 8.0), 190.0, 1e-12);
}

TEST(ModeFilter, GlobalTieGoesToBinNearestCenter) {
  std::vector<double> samples = {10, 10, 100, 100};
  EXPECT_EQ(neighborhood_mode(samples, 90.0, ModeKind::kGlobal, 8.0), 100.0);
  EXPECT_EQ(neighborhood_mode(samples, 20.0, ModeKind::kGlobal, 8.0), 10.0);
}

TEST(ModeFilter, LocalModeClimbsToNearbyCluster) {
  std::vector<double> samples = {60, 61, 62, 63, 64, 0, 0, 0, 0, 0, 0};
  EXPECT_NEAR(neighborhood_mode(samples, 58.0, ModeKind::kLocal, 8.0), 62.0, 1e-3);
}

TEST(ModeFilter, StaysWithinNeighborhoodRange) {
  const auto img = testing::random_image(17, 13, 5);
  for (auto kind : {ModeKind::kGlobal, ModeKind::kLocal}) {
    expect_within_neighborhood(img, mode_filter(img, {5, kind, 8.0}), 2, "mode");
  }
}

TEST(ModeFilter, RejectsBadParameters) {
  EXPECT_THROW(mode_filter(GrayImage(4, 4), {4, ModeKind::kLocal, 8.0}), std::invalid_argument);
  EXPECT_THROW(mode_filter(GrayImage(4, 4), {3, ModeKind::kLocal, 0.0}), std::invalid_argument);
  EXPECT_THROW(mode_filter(GrayImage(4, 4), {3, ModeKind::kGlobal, -1.0}), std::invalid_argument);
}

// --------------------------------------------------------------- bilateral

TEST(Bilateral, KernelCenterWeight) {
  EXPECT_NEAR(gaussian_kernel(0.0, 1.0), 1.0 / (2.0 * std::numbers::pi), 1e-15);
  EXPECT_NEAR(gaussian_kernel(0.0, 1.0), 0.159155, 1e-6);
  EXPECT_NEAR(gaussian_kernel(2.0, 1.0), std::exp(-2.0) / (2.0 * std::numbers::pi), 1e-15);
}

TEST(Bilateral, RadiusIsThreeSigmaRoundedUp) {
  EXPECT_EQ((BilateralParams{2.0, 25.0}).radius(), 6);
  EXPECT_EQ((BilateralParams{0.5, 25.0}).radius(), 2);
  EXPECT_EQ((BilateralParams{1.1, 25.0}).radius(), 4);
}

TEST(Bilateral, ConstantImageIsFixedPoint) {
  const GrayImage img(12, 9, 201.7);
  EXPECT_EQ(bilateral_filter(img, {}), img);
}

TEST(Bilateral, LargeRangeSigmaApproachesGaussianConvolution) {
  for (std::uint64_t seed : {1u, 2u}) {
    const auto img = testing::random_image(24, 20, seed);
    const BilateralParams p{1.5, 1e6};
    const auto oracle = testing::gaussian_convolution(img, p.sigma_s, p.radius());
    EXPECT_LT(testing::max_abs_diff(bilateral_filter(img, p), oracle), 1e-6);
  }
}

TEST(Bilateral, PreservesStepEdgeWithSmallRangeSigma) {
  GrayImage img(16, 16, 20.0);
  for (std::size_t r = 0; r < 16; ++r) {
    for (std::size_t c = 8; c < 16; ++c) img.at(r, c) = 220.0;
  }
  const auto out = bilateral_filter(img, {2.0, 10.0});
  EXPECT_NEAR(out.at(8, 7), 20.0, 1e-6);
  EXPECT_NEAR(out.at(8, 8), 220.0, 1e-6);
}

TEST(Bilateral, StaysWithinNeighborhoodRange) {
  const auto img = testing::random_image(15, 15, 6);
  const BilateralParams p{1.0, 30.0};
  expect_within_neighborhood(img, bilateral_filter(img, p), p.radius(), "bilateral");
}

TEST(Bilateral, RejectsNonpositiveSigmas) {
  EXPECT_THROW(bilateral_filter(GrayImage(4, 4), {0.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(bilateral_filter(GrayImage(4, 4), {1.0, -1.0}), std::invalid_argument);
}

// --------------------------------------------------------------- diffusion

TEST(Diffusion, ConductanceAtZeroIsOne) {
  EXPECT_EQ(conductance(0.0, 15.0, Conductance::kExponential), 1.0);
  EXPECT_EQ(conductance(0.0, 15.0, Conductance::kRational), 1.0);
}

TEST(Diffusion, ConductanceFormulas) {
  EXPECT_NEAR(conductance(30.0, 15.0, Conductance::kExponential), std::exp(-2.0), 1e-15);
  EXPECT_NEAR(conductance(-30.0, 15.0, Conductance::kRational), 1.0 / 5.0, 1e-15);
}

TEST(Diffusion, ConstantImageIsFixedPoint) {
  const GrayImage img(11, 7, 33.0);
  for (auto kind : {Conductance::kExponential, Conductance::kRational}) {
    EXPECT_EQ(anisotropic_diffusion(img, {15.0, 0.25, 50, kind}), img);
  }
}

TEST(Diffusion, PreservesMeanAndReducesVariance) {
  for (auto kind : {Conductance::kExponential, Conductance::kRational}) {
    const auto img = testing::random_image(32, 32, 7);
    const auto out = anisotropic_diffusion(img, {15.0, 0.25, 20, kind});
    EXPECT_NEAR(out.mean(), img.mean(), 1e-9);
    EXPECT_LT(variance(out), variance(img));
  }
}

TEST(Diffusion, ZeroIterationsIsIdentity) {
  const auto img = testing::random_image(9, 9, 8);
  EXPECT_EQ(anisotropic_diffusion(img, {15.0, 0.2, 0, Conductance::kExponential}), img);
}

TEST(Diffusion, RejectsUnstableOrInvalidParameters) {
  const GrayImage img(4, 4);
  EXPECT_THROW(anisotropic_diffusion(img, {15.0, 0.26, 1, Conductance::kExponential}),
               std::invalid_argument);
  EXPECT_THROW(anisotropic_diffusion(img, {15.0, 0.0, 1, Conductance::kExponential}),
               std::invalid_argument);
  EXPECT_THROW(anisotropic_diffusion(img, {0.0, 0.1, 1, Conductance::kExponential}),
               std::invalid_argument);
  EXPECT_THROW(anisotropic_diffusion(img, {15.0, 0.1, -1, Conductance::kExponential}),
               std::invalid_argument);
}

// ---------------------------------------------------------------------- tv

TEST(TotalVariation, HandEvaluatedTwoByTwo) {
  EXPECT_DOUBLE_EQ(total_variation(GrayImage(2, 2, {0, 0, 0, 1}), 0.0), 2.0);
  EXPECT_DOUBLE_EQ(total_variation(GrayImage(3, 3, 5.0), 0.0), 0.0);
}

TEST(TvDenoise, ConstantImageIsStationary) {
  const GrayImage img(10, 10, 99.0);
  EXPECT_EQ(tv_denoise(img, {}), img);
}

TEST(TvDenoise, EnergyNeverIncreasesWithDefaults) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto img = testing::random_image(24, 24, seed);
    std::vector<double> energies;
    const auto out = tv_denoise(img, {}, &energies);
    ASSERT_EQ(energies.size(), 101u);
    for (std::size_t i = 1; i < energies.size(); ++i) {
      EXPECT_LE(energies[i], energies[i - 1]) << "seed " << seed << " step " << i;
    }
    EXPECT_LT(energies.back(), energies.front());
    EXPECT_DOUBLE_EQ(energies.back(), tv_energy(out, img, {}));
  }
}

TEST(TvDenoise, HugeFidelityWeightKeepsInput) {
  const auto img = testing::random_image(32, 32, 12);
  TvParams p;
  p.lambda = 1e6;
  p.iterations = 200;
  EXPECT_LT(std::sqrt(testing::loop_mse(tv_denoise(img, p), img)), 1e-3);
}

TEST(TvDenoise, SmoothsNoise) {
  const auto clean = GrayImage(32, 32, 100.0);
  const auto noisy = add_gaussian(clean, 10.0, 3);
  TvParams p;
  p.lambda = 0.05;
  p.step = 0.5;
  p.iterations = 200;
  EXPECT_LT(testing::loop_mse(tv_denoise(noisy, p), clean), testing::loop_mse(noisy, clean));
}

TEST(TvDenoise, RejectsNonpositiveParameters) {
  const GrayImage img(4, 4);
  EXPECT_THROW(tv_denoise(img, {0.0, 0.1, 10, 1e-6}), std::invalid_argument);
  EXPECT_THROW(tv_denoise(img, {0.1, 0.0, 10, 1e-6}), std::invalid_argument);
  EXPECT_THROW(tv_denoise(img, {0.1, 0.1, 10, 0.0}), std::invalid_argument);
}

// --------------------------------------------------------------------- nlm

TEST(Nlm, ConstantImageIsFixedPoint) {
  const GrayImage img(14, 12, 128.0);
  EXPECT_EQ(nlm_denoise(img, {10.0, 2, 5}), img);
}

TEST(Nlm, WeightsAreNormalized) {
  const auto img = testing::random_image(20, 18, 13);
  const NlmParams p{10.0, 2, 4};
  for (std::size_t r = 0; r < img.height(); r += 3) {
    for (std::size_t c = 0; c < img.width(); c += 4) {
      const auto w = nlm_weights(img, p, r, c);
      ASSERT_EQ(w.size(), 81u);
      double sum = 0.0;
      for (double x : w) {
        EXPECT_GE(x, 0.0);
        EXPECT_LE(x, 1.0);
        sum += x;
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST(Nlm, MirrorSymmetricImageGivesMirroredWeights) {
  GrayImage img = testing::random_image(16, 12, 14);
  for (std::size_t r = 0; r < 12; ++r) {
    for (std::size_t c = 0; c < 8; ++c) img.at(r, 15 - c) = img.at(r, c);
  }
  const NlmParams p{15.0, 2, 3};
  const long side = 2 * p.search_radius + 1;
  for (std::size_t r = 0; r < 12; r += 5) {
    for (std::size_t c = 0; c < 8; c += 3) {
      const auto left = nlm_weights(img, p, r, c);
      const auto right = nlm_weights(img, p, r, 15 - c);
      for (long sr = 0; sr < side; ++sr) {
        for (long sc = 0; sc < side; ++sc) {
          EXPECT_NEAR(left[sr * side + sc], right[sr * side + (side - 1 - sc)], 1e-12);
        }
      }
    }
  }
}

TEST(Nlm, StaysWithinSearchWindowRange) {
  const auto img = testing::random_image(16, 16, 15);
  const NlmParams p{20.0, 1, 3};
  expect_within_neighborhood(img, nlm_denoise(img, p), p.search_radius, "nlm");
}

TEST(Nlm, RejectsInvalidParameters) {
  const GrayImage img(8, 8);
  EXPECT_THROW(nlm_denoise(img, {0.0, 1, 3}), std::invalid_argument);
  EXPECT_THROW(nlm_denoise(img, {10.0, 0, 3}), std::invalid_argument);
  EXPECT_THROW(nlm_denoise(img, {10.0, 3, 2}), std::invalid_argument);
}

// ------------------------------------------------------- shared invariants

TEST(SpatialFilters, AllSixKeepConstantImages) {
  const GrayImage img(21, 17, 140.0);
  EXPECT_EQ(median_filter(img, {}), img);
  EXPECT_EQ(mode_filter(img, {}), img);
  EXPECT_EQ(bilateral_filter(img, {}), img);
  EXPECT_EQ(anisotropic_diffusion(img, {}), img);
  EXPECT_EQ(tv_denoise(img, {}), img);
  EXPECT_EQ(nlm_denoise(img, {}), img);
}

TEST(SpatialFilters, InputsAreNotMutated) {
  const auto img = testing::random_image(12, 12, 16);
  const auto copy = img;
  (void)median_filter(img, {});
  (void)mode_filter(img, {});
  (void)bilateral_filter(img, {});
  (void)anisotropic_diffusion(img, {});
  (void)tv_denoise(img, {});
  (void)nlm_denoise(img, {});
  EXPECT_EQ(img, copy);
}

}  // namespace
}  // namespace moire
