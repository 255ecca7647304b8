#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "emn/block256.hpp"
#include "emn/mt19937.hpp"

namespace emn {

// Uniform interface over the generators under test: a stream of 256-bit
// blocks plus deterministic reseeding where the source supports it.
// Instances are single-owner mutable state; do not share one instance
// across threads.
class RandomSource {
  public:
    virtual ~RandomSource() = default;
    virtual std::string_view name() const = 0;
    virtual Block256 next_block() = 0;
    // Reseeds deterministic sources; sources without meaningful seeding
    // ignore the call and return false.
    virtual bool reseed(const Block256& seed) = 0;
};

// n bytes from the platform's cryptographic randomness facility.
// Throws EntropyUnavailable on failure; never falls back to a PRNG.
std::vector<std::uint8_t> os_entropy(std::size_t n);

// Capability yielding 32 fresh entropy bytes per call. Tests inject
// deterministic streams through this hook.
using EntropyFn = std::function<std::array<std::uint8_t, 32>()>;

// The default capability, backed by os_entropy.
EntropyFn os_entropy_fn();

class MtSource final : public RandomSource {
  public:
    explicit MtSource(const Block256& seed) : mt_(seed) {}
    std::string_view name() const override { return "mt"; }
    Block256 next_block() override { return mt_.next_block(); }
    bool reseed(const Block256& seed) override {
        mt_.seed_block(seed);
        return true;
    }
    std::uint32_t next_u32() { return mt_.next_u32(); }

  private:
    Mt19937 mt_;
};

class OsEntropySource final : public RandomSource {
  public:
    std::string_view name() const override { return "osrandom"; }
    Block256 next_block() override;
    bool reseed(const Block256&) override { return false; }
};

// The hybrid generator: a deterministic base PRNG whose output is XOR
// combined with a hash-mixed state refreshed by periodic entropy
// injection. Each call runs one generation cycle:
//
//   R <- base block
//   if cycle mod f == 0:  S <- SHA256(S xor E) with E 32 fresh entropy bytes
//   O <- S xor R
//   S <- base block            (skipped when persist_mixed_state is set)
//   cycle <- cycle + 1
//
// Cycle numbering starts at 0, so the first output is always mixed.
// With persist_mixed_state the final state refresh is skipped and the
// hash-mixed state carries across cycles between injections.
class EmnGenerator final : public RandomSource {
  public:
    EmnGenerator(std::unique_ptr<RandomSource> base, std::uint64_t injection_frequency,
                 EntropyFn entropy = os_entropy_fn(), bool persist_mixed_state = false);

    std::string_view name() const override { return "emn"; }
    Block256 next_block() override;
    bool reseed(const Block256& seed) override;

    std::uint64_t cycle() const { return cycle_; }
    std::uint64_t injection_frequency() const { return injection_frequency_; }
    // Number of secure-mixing hash invocations so far; over N outputs
    // this equals ceil(N / f).
    std::uint64_t hash_invocations() const { return hash_invocations_; }

  private:
    std::unique_ptr<RandomSource> base_;
    Block256 state_;
    std::uint64_t cycle_ = 0;
    std::uint64_t injection_frequency_;
    std::uint64_t hash_invocations_ = 0;
    EntropyFn entropy_;
    bool persist_mixed_state_;
};

// An evaluated byte sequence with its provenance.
struct ByteSample {
    std::string generator;
    std::string seed;  // 64 hex chars, or "os-entropy"
    std::vector<std::uint8_t> bytes;
};

// Draws ceil(n/32) blocks, serializes each big-endian, truncates to n.
ByteSample source_bytes(RandomSource& src, std::size_t n,
                        std::string_view seed_label = "os-entropy");

}  // namespace emn
