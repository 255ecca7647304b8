#include "emn/fft.hpp"

#include <bit>
#include <numbers>
#include <stdexcept>

namespace emn {

void fft_radix2(std::vector<std::complex<double>>& data) {
    const std::size_t n = data.size();
    if (n == 0 || !std::has_single_bit(n))
        throw std::invalid_argument("fft_radix2: length must be a power of two");
    if (n == 1) return;

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> w_len(std::cos(angle), std::sin(angle));
        for (std::size_t start = 0; start < n; start += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> even = data[start + k];
                const std::complex<double> odd = data[start + k + len / 2] * w;
                data[start + k] = even + odd;
                data[start + k + len / 2] = even - odd;
                w *= w_len;
            }
        }
    }
}

}  // namespace emn
