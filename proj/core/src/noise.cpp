#include "moire/noise.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace moire {

void MoireSpec::validate() const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    const auto where = "moire component " + std::to_string(i);
    if (!std::isfinite(c.amplitude) || !std::isfinite(c.freq_u) || !std::isfinite(c.freq_v) ||
        !std::isfinite(c.phase)) {
      throw std::invalid_argument(where + " has a non-finite field");
    }
    if (c.amplitude < 0.0) throw std::invalid_argument(where + " has a negative amplitude");
    if (std::abs(c.freq_u) > 0.5 || std::abs(c.freq_v) > 0.5) {
      throw std::invalid_argument(where + " exceeds the Nyquist limit of 0.5 cycles/pixel");
    }
  }
}

GrayImage synthesize_moire(const GrayImage& img, const MoireSpec& spec) {
  spec.validate();
  GrayImage out = img;
  for (const auto& c : spec.components) {
    const double wu = 2.0 * std::numbers::pi * c.freq_u;
    const double wv = 2.0 * std::numbers::pi * c.freq_v;
    for (std::size_t r = 0; r < out.height(); ++r) {
      for (std::size_t col = 0; col < out.width(); ++col) {
        out.at(r, col) += c.amplitude * std::sin(wu * static_cast<double>(r) +
                                                 wv * static_cast<double>(col) + c.phase);
      }
    }
  }
  return out;
}

std::uint64_t hash_random(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double hash_uniform(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(hash_random(seed, counter) >> 11) * 0x1.0p-53;
}

GrayImage add_gaussian(const GrayImage& img, double sigma, std::uint64_t seed) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("gaussian sigma must be positive");
  }
  GrayImage out = img;
  auto pixels = out.pixels();
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    // Box-Muller on two independent streams derived from the pixel index.
    const double u1 = 1.0 - hash_uniform(seed, 2 * i);  // (0, 1]
    const double u2 = hash_uniform(seed, 2 * i + 1);
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    pixels[i] += sigma * z;
  }
  return out;
}

GrayImage add_salt_pepper(const GrayImage& img, double density, std::uint64_t seed) {
  if (!(density > 0.0 && density < 1.0)) {
    throw std::invalid_argument("salt-and-pepper density must lie in (0, 1)");
  }
  GrayImage out = img;
  auto pixels = out.pixels();
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    if (hash_uniform(seed, 2 * i) < density) {
      pixels[i] = hash_random(seed, 2 * i + 1) & 1U ? 255.0 : 0.0;
    }
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_field(const std::string& text, std::size_t line_no) {
  std::istringstream is(trim(text));
  is.imbue(std::locale::classic());
  double value = 0.0;
  is >> value;
  if (!is || !is.eof()) {
    throw std::runtime_error("noise spec line " + std::to_string(line_no) + ": bad number '" +
                             text + "'");
  }
  return value;
}

}  // namespace

MoireSpec parse_moire_csv(std::istream& in) {
  MoireSpec spec;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#' || text == "amplitude,freq_u,freq_v,phase") continue;
    std::vector<std::string> fields;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 4) {
      throw std::runtime_error("noise spec line " + std::to_string(line_no) +
                               ": expected 4 comma-separated fields, got " +
                               std::to_string(fields.size()));
    }
    spec.components.push_back({parse_field(fields[0], line_no), parse_field(fields[1], line_no),
                               parse_field(fields[2], line_no), parse_field(fields[3], line_no)});
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("noise spec: ") + e.what());
  }
  return spec;
}

void write_moire_csv(std::ostream& out, const MoireSpec& spec) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << "amplitude,freq_u,freq_v,phase\n";
  for (const auto& c : spec.components) {
    os << c.amplitude << ',' << c.freq_u << ',' << c.freq_v << ',' << c.phase << '\n';
  }
  out << os.str();
}

std::vector<NamedMoireSpec> default_moire_corpus(std::size_t width, std::size_t height) {
  const double n = static_cast<double>(height);
  const double m = static_cast<double>(width);
  const double third = std::numbers::pi / 3.0;
  const MoireComponent f1{0.0, 8.0 / n, 6.0 / m, 0.0};
  const MoireComponent f2{0.0, 12.0 / n, 0.0, 0.0};
  const MoireComponent f3{0.0, 5.0 / n, 11.0 / m, 0.0};
  auto with = [](MoireComponent c, double amplitude, double phase) {
    c.amplitude = amplitude;
    c.phase = phase;
    return c;
  };
  return {
      {"m1-a10-oblique", {{with(f1, 10.0, 0.0)}}},
      {"m2-a20-axis", {{with(f2, 20.0, third)}}},
      {"m3-a40-oblique", {{with(f3, 40.0, 0.0)}}},
      {"m4-a20-pair", {{with(f1, 20.0, third), with(f2, 20.0, 0.0)}}},
      {"m5-a40-a10-pair", {{with(f2, 40.0, 0.0), with(f3, 10.0, third)}}},
      {"m6-a10-a20-a40-triple", {{with(f1, 10.0, 0.0), with(f2, 20.0, third), with(f3, 40.0, 0.0)}}},
  };
}

}  // namespace moire
