#pragma once

// Invariant wave sums, their band projections and grayscale rendering.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "latproj/pointgroup.hpp"

namespace latproj {

struct WeightedWave {
  Vec k;
  double weight = 1.0;
};

/// {delta k : delta in H} with multiplicity |Sigma_k| as weight; with
/// `orbit_sum` every distinct vector gets weight 1.
std::vector<WeightedWave> invariant_sum(const PointGroup& h, const Vec& k, bool orbit_sum = false);

struct WaveTerm {
  Vec k;                        // exact projected wave vector
  std::vector<double> u;        // its real embedding
  std::complex<double> coeff;
};

struct ProjectedWaveSum {
  std::vector<WaveTerm> terms;  // canonical order of k
  Vec source_k;
  QuadScalar y0;
  std::size_t dropped = 0;      // inputs removed because z y0 is a nonzero integer
};

/// Band integral coefficient (e^{2 pi i z y0} - 1) / (2 pi i z), or y0 at z = 0.
std::complex<double> band_coefficient(double z, double y0);

ProjectedWaveSum project_sum(const std::vector<WeightedWave>& waves, const QuadScalar& y0);

/// Sum of c e^{2 pi i <u, x>} at one point.
std::complex<double> evaluate(const ProjectedWaveSum& sum, double x, double y);

struct Window {
  double x0 = 0, y0 = 0, x1 = 2, y1 = 2;
};

struct Field {
  std::size_t width = 0, height = 0;
  std::vector<double> data;  // row-major, row 0 at the top (y = y1)
  double at(std::size_t row, std::size_t col) const { return data[row * width + col]; }
};

/// Pixel-centre coordinates of (row, col).
void pixel_center(const Window& w, std::size_t width, std::size_t height, std::size_t row, std::size_t col,
                  double& x, double& y);

class RealnessError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Re of the sum at pixel centres, rows in parallel. Throws RealnessError
/// when an imaginary residual reaches 1e-9 * sum |c|.
Field sample_field(const ProjectedWaveSum& sum, const Window& window, std::size_t width, std::size_t height);
/// Single-threaded reference; bitwise identical to sample_field.
Field sample_field_serial(const ProjectedWaveSum& sum, const Window& window, std::size_t width, std::size_t height);

/// Binary PGM bytes: min-max scaled, constant fields at 128.
std::string encode_pgm(const Field& f);
void write_pgm(const Field& f, const std::string& path);
void write_csv(const Field& f, const std::string& path);

/// 64-bit FNV-1a, used to pin rendered output.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace latproj
