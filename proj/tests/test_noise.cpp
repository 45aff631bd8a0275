#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "moire/noise.hpp"
#include "moire/transform.hpp"
#include "support/oracles.hpp"

namespace moire {
namespace {

MoireSpec single(double amplitude, double fu, double fv, double phase = 0.0) {
  return MoireSpec{{MoireComponent{amplitude, fu, fv, phase}}};
}

TEST(SynthesizeMoire, EmptySpecIsIdentity) {
  const auto img = testing::random_image(13, 9, 1);
  EXPECT_EQ(synthesize_moire(img, MoireSpec{}), img);
}

TEST(SynthesizeMoire, SinusoidRangeAndMean) {
  const auto out = synthesize_moire(GrayImage(64, 64), single(20.0, 2.0 / 64.0, 0.0));
  EXPECT_GE(out.min(), -20.0);
  EXPECT_LE(out.max(), 20.0);
  EXPECT_NEAR(out.max(), 20.0, 1e-9);
  EXPECT_NEAR(out.min(), -20.0, 1e-9);
  EXPECT_NEAR(out.mean(), 0.0, 1e-9);
}

TEST(SynthesizeMoire, ImpulsePairMagnitudeMatchesDirectDft) {
  const auto noisy = synthesize_moire(GrayImage(64, 64, 128.0), single(20.0, 2.0 / 64.0, 0.0));
  const auto oracle = testing::direct_dft(noisy);
  const auto fast = dft2d(noisy);
  const double expected = 20.0 * 64 * 64 / 2.0;
  for (std::size_t u : {2u, 62u}) {
    EXPECT_NEAR(std::abs(oracle.at(u, 0)), expected, 1e-6 * expected);
    EXPECT_NEAR(std::abs(fast.at(u, 0)), expected, 1e-6 * expected);
  }
  // Centered view puts them at offsets +-2 rows from DC.
  const auto c = center_shift(fast);
  EXPECT_NEAR(std::abs(c.at(32 + 2, 32)), expected, 1e-6 * expected);
  EXPECT_NEAR(std::abs(c.at(32 - 2, 32)), expected, 1e-6 * expected);
}

TEST(SynthesizeMoire, AdditiveUnderConcatenation) {
  const auto img = testing::random_image(40, 30, 2);
  const auto a = single(7.0, 0.1, -0.2, 0.4);
  MoireSpec b{{MoireComponent{3.0, 0.25, 0.05, 1.0}, MoireComponent{11.0, -0.5, 0.5, 0.0}}};
  MoireSpec ab = a;
  ab.components.insert(ab.components.end(), b.components.begin(), b.components.end());
  EXPECT_EQ(synthesize_moire(synthesize_moire(img, a), b), synthesize_moire(img, ab));
}

TEST(SynthesizeMoire, IntegerPeriodPreservesMean) {
  const auto img = testing::random_image(48, 32, 3);
  for (const auto& [id, spec] : default_moire_corpus(48, 32)) {
    EXPECT_NEAR(synthesize_moire(img, spec).mean(), img.mean(), 1e-9) << id;
  }
}

TEST(SynthesizeMoire, DoesNotClamp) {
  const auto out = synthesize_moire(GrayImage(16, 16, 250.0), single(40.0, 0.25, 0.0, std::numbers::pi / 2));
  EXPECT_GT(out.max(), 255.0);
}

TEST(SynthesizeMoire, RejectsAboveNyquistAndNegativeAmplitude) {
  EXPECT_THROW(synthesize_moire(GrayImage(8, 8), single(1.0, 0.51, 0.0)), std::invalid_argument);
  EXPECT_THROW(synthesize_moire(GrayImage(8, 8), single(1.0, 0.0, -0.6)), std::invalid_argument);
  EXPECT_THROW(synthesize_moire(GrayImage(8, 8), single(-1.0, 0.1, 0.1)), std::invalid_argument);
  EXPECT_NO_THROW(synthesize_moire(GrayImage(8, 8), single(1.0, 0.5, -0.5)));
}

TEST(AddGaussian, DeterministicPerSeed) {
  const GrayImage zero(32, 32);
  EXPECT_EQ(add_gaussian(zero, 5.0, 9), add_gaussian(zero, 5.0, 9));
  EXPECT_NE(add_gaussian(zero, 5.0, 9), add_gaussian(zero, 5.0, 10));
}

TEST(AddGaussian, SampleStatistics) {
  const GrayImage zero(256, 256);
  for (std::uint64_t seed : {0u, 1u, 77u}) {
    const auto noisy = add_gaussian(zero, 10.0, seed);
    const double mean = noisy.mean();
    double var = 0.0;
    for (double v : noisy.pixels()) var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var / noisy.size());
    EXPECT_LT(std::abs(mean), 5.0 * 10.0 / 256.0) << seed;
    EXPECT_GE(sd, 9.5) << seed;
    EXPECT_LE(sd, 10.5) << seed;
  }
}

TEST(AddGaussian, RejectsNonpositiveSigma) {
  EXPECT_THROW(add_gaussian(GrayImage(4, 4), 0.0, 1), std::invalid_argument);
  EXPECT_THROW(add_gaussian(GrayImage(4, 4), -2.0, 1), std::invalid_argument);
}

TEST(AddSaltPepper, FractionValuesAndDeterminism) {
  const GrayImage mid(256, 256, 100.0);
  const auto a = add_salt_pepper(mid, 0.1, 5);
  EXPECT_EQ(a, add_salt_pepper(mid, 0.1, 5));
  std::size_t corrupted = 0;
  std::size_t salt = 0;
  for (double v : a.pixels()) {
    if (v != 100.0) {
      ++corrupted;
      EXPECT_TRUE(v == 0.0 || v == 255.0);
      salt += v == 255.0;
    }
  }
  const double fraction = static_cast<double>(corrupted) / a.size();
  EXPECT_GE(fraction, 0.08);
  EXPECT_LE(fraction, 0.12);
  EXPECT_NEAR(static_cast<double>(salt) / corrupted, 0.5, 0.05);
}

TEST(AddSaltPepper, RejectsDensityOutsideOpenInterval) {
  for (double d : {0.0, 1.0, -0.1, 1.5}) {
    EXPECT_THROW(add_salt_pepper(GrayImage(4, 4), d, 1), std::invalid_argument) << d;
  }
}

TEST(Generators, LeaveInputUntouched) {
  const auto img = testing::random_image(20, 20, 4);
  const auto copy = img;
  (void)synthesize_moire(img, single(5.0, 0.1, 0.1));
  (void)add_gaussian(img, 3.0, 1);
  (void)add_salt_pepper(img, 0.3, 1);
  EXPECT_EQ(img, copy);
}

TEST(MoireCsv, ParsesHeaderCommentsAndBlankLines) {
  std::istringstream in("amplitude,freq_u,freq_v,phase\n# weak\n\n10,0.125,-0.0625,0\n 20 , 0.25 , 0 , 1.5\n");
  const auto spec = parse_moire_csv(in);
  ASSERT_EQ(spec.components.size(), 2u);
  EXPECT_EQ(spec.components[0], (MoireComponent{10, 0.125, -0.0625, 0}));
  EXPECT_EQ(spec.components[1], (MoireComponent{20, 0.25, 0, 1.5}));
}

TEST(MoireCsv, RoundTripsExactly) {
  MoireSpec spec{{MoireComponent{10, 8.0 / 256, 6.0 / 256, std::numbers::pi / 3},
                  MoireComponent{0.1, -0.3, 0.49, -2.0}}};
  std::ostringstream out;
  write_moire_csv(out, spec);
  std::istringstream in(out.str());
  EXPECT_EQ(parse_moire_csv(in), spec);
}

TEST(MoireCsv, RejectsMalformedLines) {
  for (const char* text : {"10,0.1,0.1\n", "a,b,c,d\n", "10,0.1,0.1,0,9\n", "10,0.9,0,0\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(parse_moire_csv(in), std::runtime_error) << text;
  }
}

TEST(DefaultMoireCorpus, SixSpecsSpanningAmplitudesAndDirections) {
  const auto corpus = default_moire_corpus(256, 256);
  ASSERT_EQ(corpus.size(), 6u);
  std::set<std::string> ids;
  std::set<double> amplitudes;
  std::set<double> phases;
  for (const auto& [id, spec] : corpus) {
    ids.insert(id);
    EXPECT_NO_THROW(spec.validate());
    for (const auto& c : spec.components) {
      amplitudes.insert(c.amplitude);
      phases.insert(c.phase);
      EXPECT_DOUBLE_EQ(std::round(c.freq_u * 256), c.freq_u * 256);
      EXPECT_DOUBLE_EQ(std::round(c.freq_v * 256), c.freq_v * 256);
    }
  }
  EXPECT_EQ(ids.size(), 6u);
  EXPECT_EQ(amplitudes, (std::set<double>{10, 20, 40}));
  EXPECT_EQ(phases, (std::set<double>{0.0, std::numbers::pi / 3}));
}

}  // namespace
}  // namespace moire
