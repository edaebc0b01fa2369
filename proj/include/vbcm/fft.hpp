#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace vbcm {

// In-place iterative radix-2 FFT; data.size() must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& data, bool inverse = false);

// |FFT|^2 of a real block zero-padded to nfft (power of two); returns the
// one-sided nfft/2 + 1 squared magnitudes.
std::vector<double> fft_power_onesided(std::span<const double> block, std::size_t nfft);

std::size_t next_pow2(std::size_t n);

}  // namespace vbcm
