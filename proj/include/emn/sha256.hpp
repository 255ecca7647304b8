#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace emn {

struct Digest256 {
    std::array<std::uint8_t, 32> bytes{};

    std::string to_hex() const;
    bool operator==(const Digest256&) const = default;
};

// FIPS 180-4 SHA-256 of an arbitrary byte message. Total function; the
// empty message is valid.
Digest256 sha256(std::span<const std::uint8_t> message);

}  // namespace emn
