#include "egv/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace egv {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (!is_power_of_two(n)) throw std::invalid_argument("fft: size must be a power of two");
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const auto u = a[i + k];
        const auto v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= static_cast<double>(n);
}

void fft_2d_inplace(std::vector<std::complex<double>>& a, std::size_t n_rows,
                    std::size_t n_cols, bool inverse) {
  if (a.size() != n_rows * n_cols) throw std::invalid_argument("fft2d: size mismatch");
  std::vector<std::complex<double>> buf;
  // rows
  buf.resize(n_cols);
  for (std::size_t r = 0; r < n_rows; ++r) {
    for (std::size_t c = 0; c < n_cols; ++c) buf[c] = a[r * n_cols + c];
    fft_inplace(buf, inverse);
    for (std::size_t c = 0; c < n_cols; ++c) a[r * n_cols + c] = buf[c];
  }
  // columns
  buf.resize(n_rows);
  for (std::size_t c = 0; c < n_cols; ++c) {
    for (std::size_t r = 0; r < n_rows; ++r) buf[r] = a[r * n_cols + c];
    fft_inplace(buf, inverse);
    for (std::size_t r = 0; r < n_rows; ++r) a[r * n_cols + c] = buf[r];
  }
}

}  // namespace egv
