#include "emn/generators.hpp"

#include <cerrno>
#include <cstring>
#include <stdexcept>

#include "emn/errors.hpp"
#include "emn/sha256.hpp"

#if defined(__linux__) || defined(__APPLE__) || defined(__unix__)
#include <sys/random.h>
#define EMN_HAVE_GETRANDOM 1
#endif

namespace emn {

std::vector<std::uint8_t> os_entropy(std::size_t n) {
    std::vector<std::uint8_t> out(n);
#ifdef EMN_HAVE_GETRANDOM
    std::size_t filled = 0;
    while (filled < n) {
        const ssize_t got = ::getrandom(out.data() + filled, n - filled, 0);
        if (got < 0) {
            if (errno == EINTR) continue;
            throw EntropyUnavailable(std::string("getrandom failed: ") +
                                     std::strerror(errno));
        }
        filled += static_cast<std::size_t>(got);
    }
#else
    throw EntropyUnavailable("no OS entropy facility on this platform");
#endif
    return out;
}

EntropyFn os_entropy_fn() {
    return [] {
        const auto bytes = os_entropy(32);
        std::array<std::uint8_t, 32> out;
        std::copy(bytes.begin(), bytes.end(), out.begin());
        return out;
    };
}

Block256 OsEntropySource::next_block() {
    const auto bytes = os_entropy(32);
    return Block256::from_bytes(std::span<const std::uint8_t, 32>(bytes.data(), 32));
}

EmnGenerator::EmnGenerator(std::unique_ptr<RandomSource> base,
                           std::uint64_t injection_frequency, EntropyFn entropy,
                           bool persist_mixed_state)
    : base_(std::move(base)),
      injection_frequency_(injection_frequency),
      entropy_(std::move(entropy)),
      persist_mixed_state_(persist_mixed_state) {
    if (!base_) throw std::invalid_argument("EmnGenerator: null base source");
    if (injection_frequency_ == 0)
        throw std::invalid_argument("EmnGenerator: injection frequency must be >= 1");
    state_ = base_->next_block();
}

Block256 EmnGenerator::next_block() {
    const Block256 prng_output = base_->next_block();
    if (cycle_ % injection_frequency_ == 0) {
        Block256 entropy_block = Block256::from_bytes(entropy_());
        const Digest256 mixed = sha256((state_ ^ entropy_block).bytes);
        state_ = Block256::from_bytes(mixed.bytes);
        ++hash_invocations_;
    }
    const Block256 output = state_ ^ prng_output;
    if (!persist_mixed_state_) state_ = base_->next_block();
    ++cycle_;
    return output;
}

bool EmnGenerator::reseed(const Block256& seed) {
    if (!base_->reseed(seed)) return false;
    state_ = base_->next_block();
    cycle_ = 0;
    hash_invocations_ = 0;
    return true;
}

ByteSample source_bytes(RandomSource& src, std::size_t n, std::string_view seed_label) {
    if (n == 0) throw std::invalid_argument("source_bytes: n must be >= 1");
    ByteSample sample;
    sample.generator = std::string(src.name());
    sample.seed = std::string(seed_label);
    sample.bytes.reserve(((n + 31) / 32) * 32);
    while (sample.bytes.size() < n) {
        const Block256 block = src.next_block();
        sample.bytes.insert(sample.bytes.end(), block.bytes.begin(), block.bytes.end());
    }
    sample.bytes.resize(n);
    return sample;
}

}  // namespace emn
