#include <doctest.h>

#include "emn/bench.hpp"

namespace {

const emn::Block256 kSeedA = emn::Block256::from_hex(
    "1111111111111111111111111111111111111111111111111111111111111111");
const emn::Block256 kSeedB = emn::Block256::from_hex(
    "2222222222222222222222222222222222222222222222222222222222222222");

}  // namespace

TEST_CASE("timing basics") {
    emn::MtSource src(kSeedA);
    const auto result = emn::time_generation(src, 1, 0);
    CHECK(result.generator == "mt");
    CHECK(result.n_values == 1);
    CHECK(result.wall_seconds > 0.0);
    CHECK(result.values_per_second ==
          doctest::Approx(1.0 / result.wall_seconds).epsilon(1e-9));
    CHECK_THROWS_AS(emn::time_generation(src, 0, 0), std::invalid_argument);
}

TEST_CASE("fold differs across seeds, making elision detectable") {
    emn::MtSource a(kSeedA);
    emn::MtSource b(kSeedB);
    const auto ra = emn::time_generation(a, 1000, 10);
    const auto rb = emn::time_generation(b, 1000, 10);
    CHECK(ra.fold != rb.fold);
}

TEST_CASE("wall time grows roughly linearly with n_values") {
    // generous bounds; desk-scale machines are noisy
    emn::MtSource src(kSeedA);
    const auto small = emn::time_generation(src, 200000, 1000);
    const auto large = emn::time_generation(src, 400000, 1000);
    const double ratio = large.wall_seconds / small.wall_seconds;
    CHECK(ratio > 1.0);
    CHECK(ratio < 4.0);
}

TEST_CASE("median of repetitions") {
    emn::MtSource src(kSeedA);
    const auto result = emn::time_generation_median(src, 1000, 100, 5);
    CHECK(result.n_values == 1000);
    CHECK(result.wall_seconds > 0.0);
    CHECK_THROWS_AS(emn::time_generation_median(src, 1000, 0, 0), std::invalid_argument);
}
