#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace emn {

struct ChiSquaredResult {
    double statistic = 0.0;
    double p_value = 0.0;
    unsigned dof = 255;
    std::array<std::uint64_t, 256> bins{};
};

struct EntropyResult {
    double bits = 0.0;  // in [0, 8]
};

struct PredictabilityResult {
    double r = 0.0;  // lag-1 correlation, in [-1, 1]
};

struct RunsResult {
    std::uint64_t observed = 0;
    double expected = 0.0;
    std::uint64_t n0 = 0;
    std::uint64_t n1 = 0;
    double z_score = 0.0;
};

struct SpectralSeries {
    std::vector<double> frequencies;  // cycles per sample, k / n_fft
    std::vector<double> power;
};

struct AcfSeries {
    std::vector<double> correlation;  // index = lag, correlation[0] == 1
};

struct LagCorrMatrix {
    std::size_t size = 0;  // (max_lag + 1) x (max_lag + 1)
    std::vector<double> values;  // row-major
    double at(std::size_t row, std::size_t col) const { return values[row * size + col]; }
};

struct Pmf {
    std::array<double, 256> probability{};
};

// Chi-squared uniformity test over the 256 byte bins. Requires at least
// 5 expected counts per bin (n >= 1280); p-value is the upper-tail
// survival probability at 255 degrees of freedom.
ChiSquaredResult chi_squared_test(std::span<const std::uint8_t> sample);

// Shannon entropy of the empirical byte distribution, in bits per byte.
EntropyResult shannon_entropy(std::span<const std::uint8_t> sample);

// Lag-1 correlation between successive bytes, computed with the
// numerator over the n-1 consecutive pairs and the denominator over all
// n squared deviations.
PredictabilityResult predictability(std::span<const std::uint8_t> sample);

// Wald-Wolfowitz runs test over the bit expansion of the sample (most
// significant bit first within each byte). Requires at least 100 bits.
RunsResult runs_test(std::span<const std::uint8_t> sample);

// Same test on an explicit bit sequence (each element 0 or 1), with no
// minimum-length requirement.
RunsResult runs_test_bits(std::span<const std::uint8_t> bits);

Pmf pmf(std::span<const std::uint8_t> sample);

// Autocorrelation for lags 0..max_lag, normalized so correlation[0] == 1.
AcfSeries autocorrelation(std::span<const std::uint8_t> sample, std::size_t max_lag);

// Periodogram of the mean-removed first n_fft samples: |DFT|^2 / n_fft
// for bins 0..n_fft/2. n_fft must be a power of two not exceeding the
// sample length.
SpectralSeries power_spectrum(std::span<const std::uint8_t> sample, std::size_t n_fft);

// Pearson correlation matrix among the lag-shifted copies x[i+l],
// l = 0..max_lag, over a common index window.
LagCorrMatrix lag_correlation_matrix(std::span<const std::uint8_t> sample,
                                     std::size_t max_lag);

}  // namespace emn
