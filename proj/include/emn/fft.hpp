#pragma once

#include <complex>
#include <vector>

namespace emn {

// In-place radix-2 decimation-in-time FFT. The length must be a power
// of two (1 is allowed); throws std::invalid_argument otherwise.
void fft_radix2(std::vector<std::complex<double>>& data);

}  // namespace emn
