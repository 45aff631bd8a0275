#include "cli/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include "moire/noise.hpp"

namespace moire::cli {

namespace {

struct Task {
  const NamedImage* image;
  const NamedMoireSpec* noise;
  std::string method;
};

PsnrDb mean_of_finite(const std::vector<PsnrDb>& values) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& v : values) {
    if (v.is_infinite()) continue;
    sum += v.value();
    ++count;
  }
  return count == 0 ? PsnrDb::infinite() : PsnrDb::finite(sum / static_cast<double>(count));
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<NamedImage>& images, const BenchOptions& options) {
  for (const auto& m : options.methods) {
    if (!is_method(m)) throw std::invalid_argument("unknown method '" + m + "'");
  }
  // Noise corpora depend on image size only; keep one per image.
  std::vector<std::vector<NamedMoireSpec>> corpora;
  corpora.reserve(images.size());
  for (const auto& img : images) {
    corpora.push_back(default_moire_corpus(img.image.width(), img.image.height()));
  }
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (const auto& noise : corpora[i]) {
      for (const auto& method : options.methods) tasks.push_back({&images[i], &noise, method});
    }
  }

  std::vector<BenchRow> rows(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& task = tasks[i];
      try {
        const GrayImage& clean = task.image->image;
        const GrayImage noisy = synthesize_moire(clean, task.noise->spec);
        const auto start = std::chrono::steady_clock::now();
        const auto result = apply_method(task.method, noisy, options.method_options);
        const auto stop = std::chrono::steady_clock::now();
        rows[i] = {task.image->name,
                   task.noise->id,
                   task.method,
                   psnr(clean, noisy).psnr_db,
                   psnr(clean, result.image).psnr_db,
                   options.timing ? std::chrono::duration<double, std::milli>(stop - start).count()
                                  : 0.0};
      } catch (const std::exception& e) {
        errors[i] = task.image->name + "/" + task.noise->id + "/" + task.method + ": " + e.what();
      }
    }
  };
  const unsigned jobs = std::max(1U, options.jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (!e.empty()) throw std::runtime_error(e);
  }

  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.image_name, a.noise_spec_id, a.method) <
           std::tie(b.image_name, b.noise_spec_id, b.method);
  });
  return rows;
}

std::vector<BenchSummary> summarize(const std::vector<BenchRow>& rows) {
  std::map<std::string, std::vector<const BenchRow*>> by_method;
  for (const auto& r : rows) by_method[r.method].push_back(&r);
  std::vector<BenchSummary> out;
  for (const auto& [method, group] : by_method) {
    std::vector<PsnrDb> noisy;
    std::vector<PsnrDb> denoised;
    double runtime = 0.0;
    for (const auto* r : group) {
      noisy.push_back(r->psnr_noisy_db);
      denoised.push_back(r->psnr_denoised_db);
      runtime += r->runtime_ms;
    }
    out.push_back({method, mean_of_finite(noisy), mean_of_finite(denoised),
                   runtime / static_cast<double>(group.size())});
  }
  return out;
}

std::string format_bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << kBenchHeader << '\n';
  for (const auto& r : rows) {
    os << r.image_name << ',' << r.noise_spec_id << ',' << r.method << ','
       << r.psnr_noisy_db.to_string() << ',' << r.psnr_denoised_db.to_string() << ','
       << format_fixed(r.runtime_ms, 2) << '\n';
  }
  for (const auto& s : summarize(rows)) {
    os << "summary,all," << s.method << ',' << s.mean_noisy_db.to_string() << ','
       << s.mean_denoised_db.to_string() << ',' << format_fixed(s.mean_runtime_ms, 2) << '\n';
  }
  return os.str();
}

}  // namespace moire::cli
