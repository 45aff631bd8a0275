#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "cli/bench.hpp"
#include "cli/image_files.hpp"
#include "cli/methods.hpp"
#include "moire/corpus.hpp"
#include "moire/noise.hpp"
#include "moire/pgm.hpp"
#include "moire/quality.hpp"
#include "moire/transform.hpp"

namespace moire::cli {

namespace fs = std::filesystem;

namespace {

// Raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

PgmFormat parse_format(const std::string& name) {
  return name == "ascii" ? PgmFormat::kAscii : PgmFormat::kBinary;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

// ----------------------------------------------------------------- add-noise

struct AddNoiseArgs {
  std::string in;
  std::string out;
  std::string out_float;
  std::string noise_spec;
  std::optional<double> gaussian;
  std::optional<double> salt_pepper;
  std::uint64_t seed = 0;
  std::string format = "binary";
};

int add_noise(const AddNoiseArgs& a) {
  if (a.noise_spec.empty() && !a.gaussian && !a.salt_pepper) {
    throw UsageError("add-noise needs one of --noise-spec, --gaussian, --salt-pepper");
  }
  if (a.gaussian && !(*a.gaussian > 0.0)) throw UsageError("--gaussian sigma must be positive");
  if (a.salt_pepper && !(*a.salt_pepper > 0.0 && *a.salt_pepper < 1.0)) {
    throw UsageError("--salt-pepper density must lie in (0, 1)");
  }
  const GrayImage clean = read_image_any(a.in);
  GrayImage noisy = clean;
  if (!a.noise_spec.empty()) {
    std::ifstream spec_file(a.noise_spec);
    if (!spec_file) throw std::runtime_error("cannot open " + a.noise_spec);
    noisy = synthesize_moire(clean, parse_moire_csv(spec_file));
  } else if (a.gaussian) {
    noisy = add_gaussian(clean, *a.gaussian, a.seed);
  } else {
    noisy = add_salt_pepper(clean, *a.salt_pepper, a.seed);
  }
  save_pgm(a.out, noisy, parse_format(a.format));
  if (!a.out_float.empty()) write_float_matrix(a.out_float, noisy);
  return kExitOk;
}

// ------------------------------------------------------------------- denoise

struct DenoiseArgs {
  std::string in;
  std::string out;
  std::string out_float;
  std::string method;
  std::string dump_peaks;
  std::string dump_spectrum;
  std::string format = "binary";
  std::string mode_kind = "local";
  std::string conductance = "exponential";
  MethodOptions options;
};

int denoise(DenoiseArgs a) {
  if (!is_method(a.method)) {
    throw UsageError("unknown method '" + a.method + "'; valid methods: " +
                     join(method_names(), ", "));
  }
  if (!a.dump_peaks.empty() && !is_spectral_method(a.method)) {
    throw UsageError("--dump-peaks needs --method spectral-median or notch");
  }
  a.options.mode.kind = a.mode_kind == "global" ? ModeKind::kGlobal : ModeKind::kLocal;
  a.options.diffusion.conductance =
      a.conductance == "rational" ? Conductance::kRational : Conductance::kExponential;
  try {
    validate_options(a.method, a.options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const GrayImage input = read_image_any(a.in);
  if (!a.dump_spectrum.empty()) {
    save_pgm(a.dump_spectrum, log_magnitude(center_shift(dft2d(input))));
  }
  const auto result = apply_method(a.method, input, a.options);
  save_pgm(a.out, result.image, parse_format(a.format));
  if (!a.out_float.empty()) write_float_matrix(a.out_float, result.image);
  if (!a.dump_peaks.empty()) {
    std::ostringstream csv;
    write_peaks_csv(csv, result.peaks.value_or(PeakSet{}));
    write_text(a.dump_peaks, csv.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------- psnr

int psnr_command(const std::string& ref, const std::string& test, std::ostream& out) {
  const GrayImage a = read_image_any(ref);
  const GrayImage b = read_image_any(test);
  out << "psnr_db=" << psnr(a, b).psnr_db.to_string() << '\n';
  return kExitOk;
}

// --------------------------------------------------------------------- bench

struct BenchArgs {
  std::string images;
  std::string out;
  std::vector<std::string> methods = {"notch", "spectral-median"};
  bool timing = false;
  unsigned jobs = 1;
};

int bench(const BenchArgs& a, std::ostream& err) {
  for (const auto& m : a.methods) {
    if (!is_method(m)) {
      throw UsageError("unknown method '" + m + "'; valid methods: " + join(method_names(), ", "));
    }
  }
  if (!fs::is_directory(a.images)) throw std::runtime_error(a.images + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.images)) {
    if (entry.is_regular_file() && entry.path().extension() == ".pgm") files.push_back(entry.path());
  }
  if (files.empty()) throw std::runtime_error("no .pgm images in " + a.images);
  std::sort(files.begin(), files.end());

  std::vector<NamedImage> images;
  for (const auto& f : files) images.push_back({f.stem().string(), load_pgm(f)});

  BenchOptions options;
  options.methods = a.methods;
  options.timing = a.timing;
  options.jobs = a.jobs;
  const auto rows = run_bench(images, options);
  write_text(a.out, format_bench_csv(rows));
  err << "bench: " << rows.size() << " rows written to " << a.out << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- gen-corpus

int gen_corpus(const std::string& dir, std::size_t size, std::uint64_t seed) {
  fs::create_directories(dir);
  for (const auto& img : default_image_corpus(size, size, seed)) {
    save_pgm(fs::path(dir) / (img.name + ".pgm"), img.image);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moire-pattern removal and classical denoising toolkit", "moire"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"ascii", "binary"};

  AddNoiseArgs noise_args;
  auto* add = app.add_subcommand("add-noise", "Contaminate an image with moire, Gaussian or "
                                              "salt-and-pepper noise");
  add->add_option("--in", noise_args.in, "Clean input (PGM or text matrix)")->required();
  add->add_option("--out", noise_args.out, "Noisy PGM output")->required();
  add->add_option("--out-float", noise_args.out_float, "Also save the unclamped image as a text matrix");
  auto* spec_opt = add->add_option("--noise-spec", noise_args.noise_spec,
                                   "Moire CSV: amplitude,freq_u,freq_v,phase per line");
  auto* gauss_opt = add->add_option("--gaussian", noise_args.gaussian, "Gaussian sigma");
  auto* sp_opt = add->add_option("--salt-pepper", noise_args.salt_pepper, "Corruption density");
  spec_opt->excludes(gauss_opt)->excludes(sp_opt);
  gauss_opt->excludes(sp_opt);
  add->add_option("--seed", noise_args.seed, "Random seed")->capture_default_str();
  add->add_option("--format", noise_args.format, "PGM flavor")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();

  DenoiseArgs dn;
  auto* den = app.add_subcommand("denoise", "Denoise an image with one of the registered methods");
  den->add_option("--in", dn.in, "Noisy input (PGM or text matrix)")->required();
  den->add_option("--out", dn.out, "Denoised PGM output")->required();
  den->add_option("--out-float", dn.out_float, "Also save the unclamped result as a text matrix");
  den->add_option("--method", dn.method, join(method_names(), "|"))->required();
  den->add_option("--dump-peaks", dn.dump_peaks, "CSV of detected peaks (spectral methods)");
  den->add_option("--dump-spectrum", dn.dump_spectrum, "PGM of the input's log-magnitude spectrum");
  den->add_option("--format", dn.format, "PGM flavor")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  auto& o = dn.options;
  den->add_option("--repair-radius", o.repair_radius, "Spectral repair disk radius (bins)")
      ->capture_default_str();
  den->add_option("--spectral-window", o.spectral_window, "Spectral median window side")
      ->capture_default_str();
  den->add_option("--guard-dc", o.guard_dc_radius,
                  "DC guard radius in bins (default max(8, ceil(0.02*min(W,H))))");
  den->add_option("--detect-threshold", o.detect_threshold, "Peak/background ratio")
      ->capture_default_str();
  den->add_option("--median-window", o.median.window)->capture_default_str();
  den->add_option("--mode-window", o.mode.window)->capture_default_str();
  den->add_option("--mode-kind", dn.mode_kind)
      ->check(CLI::IsMember({"local", "global"}))
      ->capture_default_str();
  den->add_option("--bin-width", o.mode.bin_width)->capture_default_str();
  den->add_option("--sigma-s", o.bilateral.sigma_s)->capture_default_str();
  den->add_option("--sigma-r", o.bilateral.sigma_r)->capture_default_str();
  den->add_option("--diffusion-k", o.diffusion.k)->capture_default_str();
  den->add_option("--diffusion-lambda", o.diffusion.lambda)->capture_default_str();
  den->add_option("--diffusion-iterations", o.diffusion.iterations)->capture_default_str();
  den->add_option("--conductance", dn.conductance)
      ->check(CLI::IsMember({"exponential", "rational"}))
      ->capture_default_str();
  den->add_option("--tv-lambda", o.tv.lambda)->capture_default_str();
  den->add_option("--tv-step", o.tv.step)->capture_default_str();
  den->add_option("--tv-iterations", o.tv.iterations)->capture_default_str();
  den->add_option("--tv-epsilon", o.tv.epsilon)->capture_default_str();
  den->add_option("--nlm-h", o.nlm.h)->capture_default_str();
  den->add_option("--patch-radius", o.nlm.patch_radius)->capture_default_str();
  den->add_option("--search-radius", o.nlm.search_radius)->capture_default_str();

  std::string ref;
  std::string test;
  auto* ps = app.add_subcommand("psnr", "Print PSNR between two images");
  ps->add_option("--ref", ref, "Reference image")->required();
  ps->add_option("--test", test, "Image under test")->required();

  BenchArgs bench_args;
  auto* be = app.add_subcommand("bench", "Run the moire benchmark over a directory of PGM images");
  be->add_option("--images", bench_args.images, "Directory of clean .pgm images")->required();
  be->add_option("--out", bench_args.out, "CSV report path")->required();
  be->add_option("--methods", bench_args.methods, "Comma-separated method list")
      ->delimiter(',')
      ->capture_default_str();
  be->add_flag("--timing", bench_args.timing, "Record wall-clock runtime per denoise call");
  be->add_option("--jobs", bench_args.jobs, "Worker threads")->capture_default_str();

  std::string corpus_dir;
  std::size_t corpus_size = 256;
  std::uint64_t corpus_seed = 1;
  auto* gen = app.add_subcommand("gen-corpus", "Write the synthetic benchmark images as PGM");
  gen->add_option("--out-dir", corpus_dir, "Destination directory")->required();
  gen->add_option("--size", corpus_size, "Image side in pixels")->capture_default_str();
  gen->add_option("--seed", corpus_seed)->capture_default_str();

  std::vector<const char*> argv = {"moire"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (add->parsed()) return add_noise(noise_args);
    if (den->parsed()) return denoise(dn);
    if (ps->parsed()) return psnr_command(ref, test, out);
    if (be->parsed()) return bench(bench_args, err);
    if (gen->parsed()) return gen_corpus(corpus_dir, corpus_size, corpus_seed);
  } catch (const UsageError& e) {
    err << "moire: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "moire: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace moire::cli
