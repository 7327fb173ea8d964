// SPDX-License-Identifier: Apache-2.0

#include "fft.hpp"

#include <cmath>

namespace ento::detail {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n < 2) return;

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }

  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv;
  }
}

std::vector<std::complex<double>> dft(std::vector<std::complex<double>> a,
                                      bool inverse) {
  const std::size_t n = a.size();
  if (n == 0) return a;
  if (is_pow2(n)) {
    fft_pow2(a, inverse);
    return a;
  }

  // Bluestein: X_k = b*_k * (a_j b*_j) conv b_j with b_j = exp(i pi j^2 / n).
  const double sign = inverse ? 1.0 : -1.0;
  std::vector<std::complex<double>> chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    // j^2 mod 2n avoids precision loss for large j
    const std::size_t j2 = (j * j) % (2 * n);
    const double ang = sign * M_PI * static_cast<double>(j2) / static_cast<double>(n);
    chirp[j] = std::complex<double>(std::cos(ang), std::sin(ang));
  }

  const std::size_t m = next_pow2(2 * n - 1);
  std::vector<std::complex<double>> fa(m, {0.0, 0.0});
  std::vector<std::complex<double>> fb(m, {0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) fa[j] = a[j] * chirp[j];
  fb[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) {
    fb[j] = std::conj(chirp[j]);
    fb[m - j] = std::conj(chirp[j]);
  }

  fft_pow2(fa, false);
  fft_pow2(fb, false);
  for (std::size_t j = 0; j < m; ++j) fa[j] *= fb[j];
  fft_pow2(fa, true);

  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = fa[k] * chirp[k];
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& x : out) x *= inv;
  }
  return out;
}

std::vector<std::complex<double>> fft_real(const std::vector<double>& x) {
  std::vector<std::complex<double>> a(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) a[i] = {x[i], 0.0};
  return dft(std::move(a), false);
}

}  // namespace ento::detail
