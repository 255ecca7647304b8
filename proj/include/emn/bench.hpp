#pragma once

#include <cstdint>
#include <string>

#include "emn/block256.hpp"
#include "emn/generators.hpp"

namespace emn {

struct TimingResult {
    std::string generator;
    std::uint64_t n_values = 0;  // 256-bit generations timed
    double wall_seconds = 0.0;
    double values_per_second = 0.0;
    Block256 fold;  // XOR of all timed outputs; keeps the workload live
};

// Runs `warmup` untimed generations, then times n_values block
// generations with a monotonic clock. Strictly single-threaded; do not
// time multiple generators concurrently in one process.
TimingResult time_generation(RandomSource& src, std::uint64_t n_values,
                             std::uint64_t warmup = 1000);

// Repeats time_generation `reps` times and returns the median by wall
// time. reps must be >= 1.
TimingResult time_generation_median(RandomSource& src, std::uint64_t n_values,
                                    std::uint64_t warmup, unsigned reps);

}  // namespace emn
