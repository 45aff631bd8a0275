#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moire/image.hpp"
#include "moire/spatial.hpp"
#include "moire/spectral.hpp"

namespace moire::cli {

/// Registered method names, in the order shown by --help.
const std::vector<std::string>& method_names();
bool is_method(std::string_view name);
bool is_spectral_method(std::string_view name);

/// Every tunable of every method. Unset spectral guard means "size default".
struct MethodOptions {
  int repair_radius = RepairParams{}.repair_radius;
  int spectral_window = RepairParams{}.window;
  std::optional<int> guard_dc_radius;
  double detect_threshold = RepairParams{}.detect_threshold;

  MedianParams median;
  ModeParams mode;
  BilateralParams bilateral;
  DiffusionParams diffusion;
  TvParams tv;
  NlmParams nlm;

  RepairParams repair_params(std::size_t width, std::size_t height) const;
};

struct MethodResult {
  GrayImage image;
  std::optional<PeakSet> peaks;  // spectral methods only
};

/// Runs `method` on `img`. Throws std::invalid_argument for an unknown name.
MethodResult apply_method(std::string_view method, const GrayImage& img,
                          const MethodOptions& options);

}  // namespace moire::cli

namespace moire::cli {

/// Rejects out-of-range parameters for `method` with std::invalid_argument,
/// before any image is touched.
void validate_options(std::string_view method, const MethodOptions& options);

}  // namespace moire::cli
