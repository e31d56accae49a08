#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "egv/params.hpp"

namespace egv {

// Uniformly sampled distribution on a box, d <= 2. Ingestion zero-pads each
// axis to a power of two (the grid box grows accordingly); row-major layout
// for d = 2 (index = iy * n[0] + ix).
struct SampledDistribution {
  int dim = 1;
  std::array<std::size_t, 2> n{1, 1};
  std::array<double, 2> x0{0.0, 0.0};
  std::array<double, 2> dx{1.0, 1.0};
  std::vector<std::complex<double>> values;

  static SampledDistribution from_samples(int dim, std::array<std::size_t, 2> n_raw,
                                          std::array<double, 2> x0, std::array<double, 2> dx,
                                          std::vector<std::complex<double>> samples);

  // n samples of f on [x_lo, x_hi): x_j = x_lo + j (x_hi - x_lo) / n
  static SampledDistribution sample_1d(const std::function<std::complex<double>(double)>& f,
                                       double x_lo, double x_hi, std::size_t n);
  static SampledDistribution sample_2d(
      const std::function<std::complex<double>(double, double)>& f, const Box& box,
      std::size_t n_per_axis);

  double box_length(int axis) const { return dx[static_cast<std::size_t>(axis)] *
                                             static_cast<double>(n[static_cast<std::size_t>(axis)]); }
  Box grid_box() const;
};

// raw little-endian float64 payload (re, im interleaved when complex)
void save_payload(const SampledDistribution& u, const std::string& path, bool complex_payload);
std::vector<double> load_raw_doubles(const std::string& path);

}  // namespace egv
