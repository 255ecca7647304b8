#include "emn/stats.hpp"

#include <cmath>
#include <stdexcept>

#include "emn/errors.hpp"
#include "emn/fft.hpp"
#include "emn/gamma.hpp"

namespace emn {

namespace {

double sample_mean(std::span<const std::uint8_t> sample) {
    double sum = 0.0;
    for (std::uint8_t b : sample) sum += b;
    return sum / static_cast<double>(sample.size());
}

}  // namespace

ChiSquaredResult chi_squared_test(std::span<const std::uint8_t> sample) {
    constexpr std::size_t kBins = 256;
    constexpr std::size_t kMinSample = kBins * 5;  // expected count >= 5 per bin
    if (sample.size() < kMinSample)
        throw InsufficientSample("chi_squared_test: need at least 1280 bytes");

    ChiSquaredResult result;
    for (std::uint8_t b : sample) ++result.bins[b];

    const double expected = static_cast<double>(sample.size()) / kBins;
    double statistic = 0.0;
    for (std::uint64_t observed : result.bins) {
        const double diff = static_cast<double>(observed) - expected;
        statistic += diff * diff / expected;
    }
    result.statistic = statistic;
    result.dof = kBins - 1;
    result.p_value = chi_squared_sf(statistic, result.dof);
    return result;
}

EntropyResult shannon_entropy(std::span<const std::uint8_t> sample) {
    if (sample.empty()) throw InsufficientSample("shannon_entropy: empty sample");

    std::array<std::uint64_t, 256> counts{};
    for (std::uint8_t b : sample) ++counts[b];

    const double n = static_cast<double>(sample.size());
    double bits = 0.0;
    for (std::uint64_t c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / n;
        bits -= p * std::log2(p);
    }
    return {bits};
}

PredictabilityResult predictability(std::span<const std::uint8_t> sample) {
    if (sample.size() < 2)
        throw InsufficientSample("predictability: need at least 2 bytes");

    const double mu = sample_mean(sample);
    double numerator = 0.0;
    double denominator = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double d = sample[i] - mu;
        denominator += d * d;
        if (i + 1 < sample.size()) numerator += d * (sample[i + 1] - mu);
    }
    if (denominator == 0.0)
        throw DegenerateSample("predictability: zero-variance sample");
    return {numerator / denominator};
}

RunsResult runs_test_bits(std::span<const std::uint8_t> bits) {
    if (bits.empty()) throw InsufficientSample("runs_test: empty bit sequence");

    RunsResult result;
    int prev_bit = -1;
    for (std::uint8_t bit : bits) {
        if (bit == 0)
            ++result.n0;
        else
            ++result.n1;
        if (bit != prev_bit) {
            ++result.observed;
            prev_bit = bit;
        }
    }
    if (result.n0 == 0 || result.n1 == 0)
        throw DegenerateSample("runs_test: single-valued bit sequence");

    const double n0 = static_cast<double>(result.n0);
    const double n1 = static_cast<double>(result.n1);
    const double n = n0 + n1;
    result.expected = 2.0 * n0 * n1 / n + 1.0;
    const double variance = 2.0 * n0 * n1 * (2.0 * n0 * n1 - n) / (n * n * (n - 1.0));
    result.z_score = (static_cast<double>(result.observed) - result.expected) /
                     std::sqrt(variance);
    return result;
}

RunsResult runs_test(std::span<const std::uint8_t> sample) {
    const std::uint64_t n_bits = static_cast<std::uint64_t>(sample.size()) * 8;
    if (n_bits < 100)
        throw InsufficientSample("runs_test: need at least 100 bits");

    std::vector<std::uint8_t> bits;
    bits.reserve(n_bits);
    for (std::uint8_t byte : sample)
        for (int shift = 7; shift >= 0; --shift)  // MSB first
            bits.push_back(static_cast<std::uint8_t>((byte >> shift) & 1));
    return runs_test_bits(bits);
}

Pmf pmf(std::span<const std::uint8_t> sample) {
    if (sample.empty()) throw InsufficientSample("pmf: empty sample");
    Pmf result;
    for (std::uint8_t b : sample) result.probability[b] += 1.0;
    for (double& p : result.probability) p /= static_cast<double>(sample.size());
    return result;
}

AcfSeries autocorrelation(std::span<const std::uint8_t> sample, std::size_t max_lag) {
    if (max_lag >= sample.size())
        throw std::invalid_argument("autocorrelation: max_lag must be < sample length");

    const double mu = sample_mean(sample);
    double denominator = 0.0;
    for (std::uint8_t b : sample) {
        const double d = b - mu;
        denominator += d * d;
    }
    if (denominator == 0.0)
        throw DegenerateSample("autocorrelation: zero-variance sample");

    AcfSeries series;
    series.correlation.resize(max_lag + 1);
    for (std::size_t lag = 0; lag <= max_lag; ++lag) {
        double numerator = 0.0;
        for (std::size_t i = 0; i + lag < sample.size(); ++i)
            numerator += (sample[i] - mu) * (sample[i + lag] - mu);
        series.correlation[lag] = numerator / denominator;
    }
    series.correlation[0] = 1.0;
    return series;
}

SpectralSeries power_spectrum(std::span<const std::uint8_t> sample, std::size_t n_fft) {
    if (n_fft == 0 || (n_fft & (n_fft - 1)) != 0)
        throw std::invalid_argument("power_spectrum: n_fft must be a power of two");
    if (n_fft > sample.size())
        throw std::invalid_argument("power_spectrum: n_fft exceeds sample length");

    double mu = 0.0;
    for (std::size_t i = 0; i < n_fft; ++i) mu += sample[i];
    mu /= static_cast<double>(n_fft);

    std::vector<std::complex<double>> data(n_fft);
    for (std::size_t i = 0; i < n_fft; ++i) data[i] = sample[i] - mu;
    fft_radix2(data);

    SpectralSeries series;
    series.frequencies.resize(n_fft / 2 + 1);
    series.power.resize(n_fft / 2 + 1);
    for (std::size_t k = 0; k <= n_fft / 2; ++k) {
        series.frequencies[k] = static_cast<double>(k) / static_cast<double>(n_fft);
        series.power[k] = std::norm(data[k]) / static_cast<double>(n_fft);
    }
    return series;
}

LagCorrMatrix lag_correlation_matrix(std::span<const std::uint8_t> sample,
                                     std::size_t max_lag) {
    if (sample.size() < 2 || max_lag >= sample.size() / 2)
        throw std::invalid_argument(
            "lag_correlation_matrix: max_lag must be < sample length / 2");

    // Common window so every lagged copy has the same length.
    const std::size_t window = sample.size() - max_lag;
    const std::size_t k = max_lag + 1;

    std::vector<double> means(k, 0.0);
    for (std::size_t l = 0; l < k; ++l) {
        double sum = 0.0;
        for (std::size_t i = 0; i < window; ++i) sum += sample[i + l];
        means[l] = sum / static_cast<double>(window);
    }

    // Centered cross products; variance on the diagonal.
    std::vector<double> cov(k * k, 0.0);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) {
            double sum = 0.0;
            for (std::size_t i = 0; i < window; ++i)
                sum += (sample[i + a] - means[a]) * (sample[i + b] - means[b]);
            cov[a * k + b] = sum;
            cov[b * k + a] = sum;
        }
    }
    for (std::size_t l = 0; l < k; ++l)
        if (cov[l * k + l] == 0.0)
            throw DegenerateSample("lag_correlation_matrix: zero-variance column");

    LagCorrMatrix matrix;
    matrix.size = k;
    matrix.values.resize(k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            matrix.values[a * k + b] =
                (a == b) ? 1.0
                         : cov[a * k + b] / std::sqrt(cov[a * k + a] * cov[b * k + b]);
    return matrix;
}

}  // namespace emn
