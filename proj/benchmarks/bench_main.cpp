#include <benchmark/benchmark.h>

#include <cstddef>

#include "moire/corpus.hpp"
#include "moire/noise.hpp"
#include "moire/spatial.hpp"
#include "moire/spectral.hpp"
#include "moire/transform.hpp"

namespace {

using namespace moire;

GrayImage contaminated(std::size_t n) {
  const auto corpus = default_moire_corpus(n, n);
  return synthesize_moire(make_shapes(n, n, 1), corpus.back().spec);
}

void BM_Dft2d(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto img = make_shapes(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(dft2d(img));
}
// Powers of two take the radix-2 path; the rest go through Bluestein.
BENCHMARK(BM_Dft2d)->Arg(64)->Arg(127)->Arg(128)->Arg(250)->Arg(256)->Arg(512);

void BM_RoundTrip(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto img = make_shapes(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(idft2d(dft2d(img)));
}
BENCHMARK(BM_RoundTrip)->Arg(128)->Arg(256);

void BM_DetectPeaks(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto spec = center_shift(dft2d(contaminated(n)));
  const auto params = RepairParams::for_size(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(detect_peaks(spec, params));
}
BENCHMARK(BM_DetectPeaks)->Arg(128)->Arg(256);

void BM_DenoiseMoire(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto method = state.range(1) == 0 ? RepairMethod::kNotch : RepairMethod::kMedian;
  const auto img = contaminated(n);
  const auto params = RepairParams::for_size(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(denoise_moire(img, method, params));
}
BENCHMARK(BM_DenoiseMoire)->ArgsProduct({{128, 256}, {0, 1}})->ArgNames({"n", "median"});

void BM_MedianFilter(benchmark::State& state) {
  const auto img = contaminated(256);
  const MedianParams p{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(median_filter(img, p));
}
BENCHMARK(BM_MedianFilter)->Arg(3)->Arg(5)->Arg(7);

void BM_ModeFilter(benchmark::State& state) {
  const auto img = contaminated(256);
  for (auto _ : state) benchmark::DoNotOptimize(mode_filter(img, ModeParams{}));
}
BENCHMARK(BM_ModeFilter);

void BM_Bilateral(benchmark::State& state) {
  const auto img = contaminated(256);
  for (auto _ : state) benchmark::DoNotOptimize(bilateral_filter(img, BilateralParams{}));
}
BENCHMARK(BM_Bilateral);

void BM_Diffusion(benchmark::State& state) {
  const auto img = contaminated(256);
  for (auto _ : state) benchmark::DoNotOptimize(anisotropic_diffusion(img, DiffusionParams{}));
}
BENCHMARK(BM_Diffusion);

void BM_TvDenoise(benchmark::State& state) {
  const auto img = contaminated(256);
  for (auto _ : state) benchmark::DoNotOptimize(tv_denoise(img, TvParams{}));
}
BENCHMARK(BM_TvDenoise);

void BM_Nlm(benchmark::State& state) {
  const auto img = contaminated(64);
  for (auto _ : state) benchmark::DoNotOptimize(nlm_denoise(img, NlmParams{}));
}
BENCHMARK(BM_Nlm)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
