#include "cli/image_files.hpp"

#include <fstream>
#include <locale>
#include <sstream>
#include <stdexcept>

namespace moire::cli {

GrayImage read_image_any(const std::filesystem::path& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw std::runtime_error("cannot open " + path.string());
  const int first = probe.peek();
  probe.close();
  return first == 'P' ? load_pgm(path) : read_float_matrix(path);
}

void write_float_matrix(const std::filesystem::path& path, const GrayImage& img) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << img.width() << ' ' << img.height() << '\n';
  for (std::size_t r = 0; r < img.height(); ++r) {
    for (std::size_t c = 0; c < img.width(); ++c) {
      if (c > 0) os << ' ';
      os << img.at(r, c);
    }
    os << '\n';
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << os.str();
}

GrayImage read_float_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  in.imbue(std::locale::classic());
  std::size_t width = 0;
  std::size_t height = 0;
  if (!(in >> width >> height) || width == 0 || height == 0) {
    throw std::runtime_error(path.string() + ": bad matrix header");
  }
  std::vector<double> data(width * height);
  for (auto& v : data) {
    if (!(in >> v)) throw std::runtime_error(path.string() + ": truncated matrix");
  }
  return GrayImage(width, height, std::move(data));
}

}  // namespace moire::cli
