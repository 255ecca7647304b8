#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "emn/block256.hpp"

namespace emn {

// MT19937 Mersenne Twister, implemented from the reference algorithm.
// Supports both the scalar init_genrand seeding and init_by_array, which
// is how a 256-bit seed is delivered (8 little-endian 32-bit words,
// least significant word first).
class Mt19937 {
  public:
    static constexpr std::size_t kStateSize = 624;

    explicit Mt19937(std::uint32_t seed = 5489u) { seed_scalar(seed); }
    explicit Mt19937(std::span<const std::uint32_t> key) { seed_by_array(key); }
    explicit Mt19937(const Block256& seed) { seed_block(seed); }

    void seed_scalar(std::uint32_t seed);
    // Canonical init_by_array. Throws std::invalid_argument on an empty
    // key or one longer than the state.
    void seed_by_array(std::span<const std::uint32_t> key);
    // 256-bit seed as 8 words, least significant first.
    void seed_block(const Block256& seed);

    std::uint32_t next_u32();

    // getrandbits(256): eight consecutive outputs composed least
    // significant word first.
    Block256 next_block();

  private:
    void twist();

    std::array<std::uint32_t, kStateSize> mt_{};
    std::size_t index_ = kStateSize;
};

}  // namespace emn
