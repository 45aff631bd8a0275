#include "cli/methods.hpp"

#include <algorithm>
#include <stdexcept>

namespace moire::cli {

const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names = {
      "spectral-median", "notch", "median", "mode", "bilateral", "diffusion", "tv", "nlm"};
  return names;
}

bool is_method(std::string_view name) {
  const auto& names = method_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

bool is_spectral_method(std::string_view name) {
  return name == "spectral-median" || name == "notch";
}

RepairParams MethodOptions::repair_params(std::size_t width, std::size_t height) const {
  RepairParams p = RepairParams::for_size(width, height);
  p.repair_radius = repair_radius;
  p.window = spectral_window;
  if (guard_dc_radius) p.guard_dc_radius = *guard_dc_radius;
  p.detect_threshold = detect_threshold;
  return p;
}

MethodResult apply_method(std::string_view method, const GrayImage& img,
                          const MethodOptions& options) {
  if (is_spectral_method(method)) {
    const auto kind = method == "notch" ? RepairMethod::kNotch : RepairMethod::kMedian;
    auto result = denoise_moire(img, kind, options.repair_params(img.width(), img.height()));
    return {std::move(result.image), std::move(result.peaks)};
  }
  if (method == "median") return {median_filter(img, options.median), std::nullopt};
  if (method == "mode") return {mode_filter(img, options.mode), std::nullopt};
  if (method == "bilateral") return {bilateral_filter(img, options.bilateral), std::nullopt};
  if (method == "diffusion") return {anisotropic_diffusion(img, options.diffusion), std::nullopt};
  if (method == "tv") return {tv_denoise(img, options.tv), std::nullopt};
  if (method == "nlm") return {nlm_denoise(img, options.nlm), std::nullopt};
  throw std::invalid_argument("unknown method '" + std::string(method) + "'");
}

}  // namespace moire::cli

namespace moire::cli {

void validate_options(std::string_view method, const MethodOptions& o) {
  auto require = [](bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
  };
  if (is_spectral_method(method)) {
    RepairParams p;
    p.repair_radius = o.repair_radius;
    p.window = o.spectral_window;
    p.guard_dc_radius = o.guard_dc_radius.value_or(0);
    p.detect_threshold = o.detect_threshold;
    p.validate();
  } else if (method == "median") {
    require(o.median.window >= 3 && o.median.window % 2 == 1, "--median-window must be odd and >= 3");
  } else if (method == "mode") {
    require(o.mode.window >= 1 && o.mode.window % 2 == 1, "--mode-window must be odd");
    require(o.mode.bin_width > 0.0, "--bin-width must be positive");
  } else if (method == "bilateral") {
    require(o.bilateral.sigma_s > 0.0 && o.bilateral.sigma_r > 0.0,
            "--sigma-s and --sigma-r must be positive");
  } else if (method == "diffusion") {
    require(o.diffusion.lambda > 0.0 && o.diffusion.lambda <= 0.25,
            "--diffusion-lambda must lie in (0, 0.25]");
    require(o.diffusion.k > 0.0, "--diffusion-k must be positive");
    require(o.diffusion.iterations >= 0, "--diffusion-iterations must be >= 0");
  } else if (method == "tv") {
    require(o.tv.lambda > 0.0 && o.tv.step > 0.0 && o.tv.epsilon > 0.0,
            "--tv-lambda, --tv-step and --tv-epsilon must be positive");
    require(o.tv.iterations >= 0, "--tv-iterations must be >= 0");
  } else if (method == "nlm") {
    require(o.nlm.h > 0.0, "--nlm-h must be positive");
    require(o.nlm.patch_radius >= 1, "--patch-radius must be >= 1");
    require(o.nlm.search_radius >= o.nlm.patch_radius, "--search-radius must be >= --patch-radius");
  } else {
    throw std::invalid_argument("unknown method '" + std::string(method) + "'");
  }
}

}  // namespace moire::cli
