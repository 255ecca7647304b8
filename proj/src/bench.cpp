#include "emn/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

namespace emn {

TimingResult time_generation(RandomSource& src, std::uint64_t n_values,
                             std::uint64_t warmup) {
    if (n_values == 0)
        throw std::invalid_argument("time_generation: n_values must be >= 1");

    Block256 fold;
    for (std::uint64_t i = 0; i < warmup; ++i) fold ^= src.next_block();
    fold = Block256{};

    const auto start = std::chrono::steady_clock::now();
    for (std::uint64_t i = 0; i < n_values; ++i) fold ^= src.next_block();
    const auto stop = std::chrono::steady_clock::now();

    TimingResult result;
    result.generator = std::string(src.name());
    result.n_values = n_values;
    result.wall_seconds =
        std::max(std::chrono::duration<double>(stop - start).count(), 1e-9);
    result.values_per_second = static_cast<double>(n_values) / result.wall_seconds;
    result.fold = fold;
    return result;
}

TimingResult time_generation_median(RandomSource& src, std::uint64_t n_values,
                                    std::uint64_t warmup, unsigned reps) {
    if (reps == 0)
        throw std::invalid_argument("time_generation_median: reps must be >= 1");
    std::vector<TimingResult> runs;
    runs.reserve(reps);
    for (unsigned i = 0; i < reps; ++i)
        runs.push_back(time_generation(src, n_values, warmup));
    std::sort(runs.begin(), runs.end(), [](const auto& a, const auto& b) {
        return a.wall_seconds < b.wall_seconds;
    });
    return runs[runs.size() / 2];
}

}  // namespace emn
