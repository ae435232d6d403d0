#include "latproj/planform.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <numbers>
#include <stdexcept>

namespace latproj {

std::vector<WeightedWave> invariant_sum(const PointGroup& h, const Vec& k, bool orbit_sum) {
  std::map<Vec, double, StructuralLess> counts;
  for (const auto& g : h.elements()) counts[g(k)] += 1.0;
  std::vector<WeightedWave> out;
  for (auto& [v, w] : counts) out.push_back({v, orbit_sum ? 1.0 : w});
  std::sort(out.begin(), out.end(), [](const WeightedWave& a, const WeightedWave& b) { return compare(a.k, b.k) < 0; });
  return out;
}

std::complex<double> band_coefficient(double z, double y0) {
  if (z == 0.0) return {y0, 0.0};
  const double theta = 2.0 * std::numbers::pi * z * y0;
  const double c = 2.0 * std::numbers::pi * z;
  const double s = std::sin(0.5 * theta);
  return {std::sin(theta) / c, 2.0 * s * s / c};
}

ProjectedWaveSum project_sum(const std::vector<WeightedWave>& waves, const QuadScalar& y0) {
  if (y0.sign() <= 0) throw std::invalid_argument("band width y0 must be positive");
  ProjectedWaveSum out;
  out.y0 = y0;
  if (!waves.empty()) out.source_k = waves.front().k;
  const double y0d = y0.to_double();
  std::map<Vec, std::complex<double>, StructuralLess> merged;
  for (const auto& w : waves) {
    const QuadScalar& z = last_coord(w.k);
    auto zy = (z * y0).as_integer();
    if (zy && *zy != 0) {
      ++out.dropped;
      continue;
    }
    merged[project(w.k)] += w.weight * band_coefficient(z.to_double(), y0d);
  }
  for (auto& [k, c] : merged) out.terms.push_back({k, to_doubles(k), c});
  std::sort(out.terms.begin(), out.terms.end(),
            [](const WaveTerm& a, const WaveTerm& b) { return compare(a.k, b.k) < 0; });
  return out;
}

namespace {

struct FlatTerm {
  double ux, uy;
  std::complex<double> c;
};

std::vector<FlatTerm> flatten(const ProjectedWaveSum& sum) {
  std::vector<FlatTerm> out;
  out.reserve(sum.terms.size());
  for (const auto& t : sum.terms) {
    if (t.u.size() != 2) throw std::invalid_argument("rendering needs two-dimensional wave vectors");
    out.push_back({t.u[0], t.u[1], t.coeff});
  }
  return out;
}

inline std::complex<double> eval_flat(const std::vector<FlatTerm>& terms, double x, double y) {
  std::complex<double> acc = 0.0;
  for (const auto& t : terms) {
    const double phase = 2.0 * std::numbers::pi * (t.ux * x + t.uy * y);
    acc += t.c * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return acc;
}

double coefficient_mass(const ProjectedWaveSum& sum) {
  double m = 0.0;
  for (const auto& t : sum.terms) m += std::abs(t.coeff);
  return m;
}

void check_realness(double residual, double mass) {
  if (residual > 1e-9 * mass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "sampled field is not real: residual %.3e vs mass %.3e", residual, mass);
    throw RealnessError(buf);
  }
}

void fill_row(const std::vector<FlatTerm>& terms, const Window& w, std::size_t width, std::size_t height,
              std::size_t row, double* out, double& residual) {
  for (std::size_t col = 0; col < width; ++col) {
    double x, y;
    pixel_center(w, width, height, row, col, x, y);
    std::complex<double> v = eval_flat(terms, x, y);
    out[col] = v.real();
    residual = std::max(residual, std::abs(v.imag()));
  }
}

}  // namespace

std::complex<double> evaluate(const ProjectedWaveSum& sum, double x, double y) {
  return eval_flat(flatten(sum), x, y);
}

void pixel_center(const Window& w, std::size_t width, std::size_t height, std::size_t row, std::size_t col,
                  double& x, double& y) {
  x = w.x0 + (static_cast<double>(col) + 0.5) * (w.x1 - w.x0) / static_cast<double>(width);
  y = w.y1 - (static_cast<double>(row) + 0.5) * (w.y1 - w.y0) / static_cast<double>(height);
}

Field sample_field_serial(const ProjectedWaveSum& sum, const Window& window, std::size_t width, std::size_t height) {
  if (width < 1 || height < 1) throw std::invalid_argument("resolution must be at least 1x1");
  const auto terms = flatten(sum);
  Field f{width, height, std::vector<double>(width * height)};
  double residual = 0.0;
  for (std::size_t row = 0; row < height; ++row) fill_row(terms, window, width, height, row, &f.data[row * width], residual);
  check_realness(residual, coefficient_mass(sum));
  return f;
}

Field sample_field(const ProjectedWaveSum& sum, const Window& window, std::size_t width, std::size_t height) {
  if (width < 1 || height < 1) throw std::invalid_argument("resolution must be at least 1x1");
  const auto terms = flatten(sum);
  Field f{width, height, std::vector<double>(width * height)};
  double residual = 0.0;
  const long rows = static_cast<long>(height);
#pragma omp parallel for schedule(static) reduction(max : residual)
  for (long row = 0; row < rows; ++row) {
    double local = 0.0;
    fill_row(terms, window, width, height, static_cast<std::size_t>(row), &f.data[static_cast<std::size_t>(row) * width],
             local);
    residual = std::max(residual, local);
  }
  check_realness(residual, coefficient_mass(sum));
  return f;
}

std::string encode_pgm(const Field& f) {
  std::string out = "P5\n" + std::to_string(f.width) + " " + std::to_string(f.height) + "\n255\n";
  if (f.data.empty()) return out;
  auto [lo, hi] = std::minmax_element(f.data.begin(), f.data.end());
  const double mn = *lo, mx = *hi;
  out.reserve(out.size() + f.data.size());
  for (double v : f.data) {
    unsigned char b = 128;
    if (mx > mn) b = static_cast<unsigned char>(std::lround(255.0 * (v - mn) / (mx - mn)));
    out.push_back(static_cast<char>(b));
  }
  return out;
}

namespace {

void write_bytes(const std::string& bytes, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing: " + std::strerror(errno));
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

void write_pgm(const Field& f, const std::string& path) { write_bytes(encode_pgm(f), path); }

void write_csv(const Field& f, const std::string& path) {
  std::string s;
  char buf[32];
  for (std::size_t r = 0; r < f.height; ++r) {
    for (std::size_t c = 0; c < f.width; ++c) {
      std::snprintf(buf, sizeof buf, "%.12e", f.at(r, c));
      if (c) s += ',';
      s += buf;
    }
    s += '\n';
  }
  write_bytes(s, path);
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace latproj
