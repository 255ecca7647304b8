#include "emn/block256.hpp"

#include <stdexcept>

namespace emn {

namespace {

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

Block256 Block256::from_bytes(std::span<const std::uint8_t, 32> data) {
    Block256 out;
    std::copy(data.begin(), data.end(), out.bytes.begin());
    return out;
}

Block256 Block256::from_words_lsw_first(std::span<const std::uint32_t, 8> words) {
    Block256 out;
    for (std::size_t i = 0; i < 8; ++i) {
        const std::uint32_t w = words[i];
        // word i occupies bytes [28-4i, 31-4i], big-endian within the word
        const std::size_t base = 28 - 4 * i;
        out.bytes[base + 0] = static_cast<std::uint8_t>(w >> 24);
        out.bytes[base + 1] = static_cast<std::uint8_t>(w >> 16);
        out.bytes[base + 2] = static_cast<std::uint8_t>(w >> 8);
        out.bytes[base + 3] = static_cast<std::uint8_t>(w);
    }
    return out;
}

Block256 Block256::from_hex(std::string_view hex) {
    if (hex.size() != 64)
        throw std::invalid_argument("Block256: hex string must be exactly 64 characters");
    Block256 out;
    for (std::size_t i = 0; i < 32; ++i) {
        const int hi = hex_nibble(hex[2 * i]);
        const int lo = hex_nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0)
            throw std::invalid_argument("Block256: invalid hex character");
        out.bytes[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

std::array<std::uint32_t, 8> Block256::to_words_lsw_first() const {
    std::array<std::uint32_t, 8> words{};
    for (std::size_t i = 0; i < 8; ++i) {
        const std::size_t base = 28 - 4 * i;
        words[i] = (static_cast<std::uint32_t>(bytes[base + 0]) << 24) |
                   (static_cast<std::uint32_t>(bytes[base + 1]) << 16) |
                   (static_cast<std::uint32_t>(bytes[base + 2]) << 8) |
                   static_cast<std::uint32_t>(bytes[base + 3]);
    }
    return words;
}

std::string Block256::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

}  // namespace emn
