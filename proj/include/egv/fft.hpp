#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace egv {

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

// In-place iterative radix-2 FFT; size must be a power of two. The inverse
// transform includes the 1/n factor.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse = false);

// Row-column 2D transform of row-major data (n_rows x n_cols, both powers of two).
void fft_2d_inplace(std::vector<std::complex<double>>& a, std::size_t n_rows,
                    std::size_t n_cols, bool inverse = false);

}  // namespace egv
