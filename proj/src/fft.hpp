// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ento::detail {

// In-place iterative radix-2 transform; size must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse);

// DFT of arbitrary length (Bluestein fallback for non powers of two).
std::vector<std::complex<double>> dft(std::vector<std::complex<double>> a,
                                      bool inverse = false);

std::vector<std::complex<double>> fft_real(const std::vector<double>& x);

}  // namespace ento::detail
