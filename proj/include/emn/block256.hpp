#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace emn {

// A 256-bit value. The canonical byte encoding is big-endian: bytes[0]
// holds the most significant 8 bits. Word views use eight 32-bit words
// with word 0 least significant, matching getrandbits-style composition.
struct Block256 {
    std::array<std::uint8_t, 32> bytes{};

    static Block256 from_bytes(std::span<const std::uint8_t, 32> data);
    static Block256 from_words_lsw_first(std::span<const std::uint32_t, 8> words);
    static Block256 from_hex(std::string_view hex);  // exactly 64 hex chars

    std::array<std::uint32_t, 8> to_words_lsw_first() const;
    std::string to_hex() const;

    friend Block256 operator^(const Block256& a, const Block256& b) {
        Block256 out;
        for (std::size_t i = 0; i < 32; ++i)
            out.bytes[i] = static_cast<std::uint8_t>(a.bytes[i] ^ b.bytes[i]);
        return out;
    }
    Block256& operator^=(const Block256& other) {
        for (std::size_t i = 0; i < 32; ++i) bytes[i] ^= other.bytes[i];
        return *this;
    }
    bool operator==(const Block256&) const = default;
};

}  // namespace emn
