#include "emn/mt19937.hpp"

#include <stdexcept>

namespace emn {

namespace {

constexpr std::uint32_t kMatrixA = 0x9908b0dfu;
constexpr std::uint32_t kUpperMask = 0x80000000u;
constexpr std::uint32_t kLowerMask = 0x7fffffffu;
constexpr std::size_t kShift = 397;

}  // namespace

void Mt19937::seed_scalar(std::uint32_t seed) {
    mt_[0] = seed;
    for (std::size_t i = 1; i < kStateSize; ++i)
        mt_[i] = 1812433253u * (mt_[i - 1] ^ (mt_[i - 1] >> 30)) +
                 static_cast<std::uint32_t>(i);
    index_ = kStateSize;
}

void Mt19937::seed_by_array(std::span<const std::uint32_t> key) {
    if (key.empty())
        throw std::invalid_argument("Mt19937: seed key must not be empty");
    if (key.size() > kStateSize)
        throw std::invalid_argument("Mt19937: seed key longer than state");

    seed_scalar(19650218u);
    std::size_t i = 1, j = 0;
    for (std::size_t k = std::max(kStateSize, key.size()); k != 0; --k) {
        mt_[i] = (mt_[i] ^ ((mt_[i - 1] ^ (mt_[i - 1] >> 30)) * 1664525u)) +
                 key[j] + static_cast<std::uint32_t>(j);
        ++i;
        ++j;
        if (i >= kStateSize) {
            mt_[0] = mt_[kStateSize - 1];
            i = 1;
        }
        if (j >= key.size()) j = 0;
    }
    for (std::size_t k = kStateSize - 1; k != 0; --k) {
        mt_[i] = (mt_[i] ^ ((mt_[i - 1] ^ (mt_[i - 1] >> 30)) * 1566083941u)) -
                 static_cast<std::uint32_t>(i);
        ++i;
        if (i >= kStateSize) {
            mt_[0] = mt_[kStateSize - 1];
            i = 1;
        }
    }
    mt_[0] = 0x80000000u;  // MSB set guarantees a non-zero state
    index_ = kStateSize;
}

void Mt19937::seed_block(const Block256& seed) {
    const auto words = seed.to_words_lsw_first();
    seed_by_array(std::span<const std::uint32_t>(words));
}

void Mt19937::twist() {
    for (std::size_t i = 0; i < kStateSize; ++i) {
        const std::uint32_t y =
            (mt_[i] & kUpperMask) | (mt_[(i + 1) % kStateSize] & kLowerMask);
        mt_[i] = mt_[(i + kShift) % kStateSize] ^ (y >> 1);
        if (y & 1u) mt_[i] ^= kMatrixA;
    }
    index_ = 0;
}

std::uint32_t Mt19937::next_u32() {
    if (index_ >= kStateSize) twist();
    std::uint32_t y = mt_[index_++];
    y ^= y >> 11;
    y ^= (y << 7) & 0x9d2c5680u;
    y ^= (y << 15) & 0xefc60000u;
    y ^= y >> 18;
    return y;
}

Block256 Mt19937::next_block() {
    std::array<std::uint32_t, 8> words;
    for (auto& w : words) w = next_u32();
    return Block256::from_words_lsw_first(words);
}

}  // namespace emn
