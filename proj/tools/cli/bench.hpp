#pragma once

#include <string>
#include <vector>

#include "cli/methods.hpp"
#include "moire/corpus.hpp"
#include "moire/quality.hpp"

namespace moire::cli {

/// One (image, noise spec, method) measurement. PSNR is against the clean
/// source, on the full-precision images.
struct BenchRow {
  std::string image_name;
  std::string noise_spec_id;
  std::string method;
  PsnrDb psnr_noisy_db = PsnrDb::infinite();
  PsnrDb psnr_denoised_db = PsnrDb::infinite();
  double runtime_ms = 0.0;
};

struct BenchSummary {
  std::string method;
  PsnrDb mean_noisy_db = PsnrDb::infinite();
  PsnrDb mean_denoised_db = PsnrDb::infinite();
  double mean_runtime_ms = 0.0;
};

struct BenchOptions {
  std::vector<std::string> methods = {"notch", "spectral-median"};
  MethodOptions method_options;
  /// Record wall-clock time per denoise call. Off keeps the report
  /// byte-reproducible (runtime_ms is written as 0.00).
  bool timing = false;
  unsigned jobs = 1;
};

/// Runs every image against the default moire corpus and every method. Rows
/// come back sorted by (image, noise, method).
std::vector<BenchRow> run_bench(const std::vector<NamedImage>& images, const BenchOptions& options);

/// Per-method means over the finite PSNR values, sorted by method name.
std::vector<BenchSummary> summarize(const std::vector<BenchRow>& rows);

inline constexpr const char* kBenchHeader = "image,noise,method,psnr_noisy,psnr_denoised,runtime_ms";

/// Header, data rows, then one "summary,all,<method>,..." row per method.
std::string format_bench_csv(const std::vector<BenchRow>& rows);

}  // namespace moire::cli
