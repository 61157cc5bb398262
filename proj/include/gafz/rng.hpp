#pragma once

#include <cstdint>

namespace gafz {

/// Deterministic per-replicate stream: the state is derived from
/// (master_seed, replicate_id) by splitmix64 mixing, so replicate r
/// produces the same numbers regardless of thread count or draw order.
class StreamRng {
public:
    StreamRng(uint64_t master_seed, uint64_t replicate_id) {
        state_ = mix(mix(master_seed) ^ mix(replicate_id + 0x9E3779B97F4A7C15ull));
    }

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    /// Uniform double in (0, 1]; never 0, so log() stays finite.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

private:
    static uint64_t mix(uint64_t x) {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    uint64_t state_;
};

}  // namespace gafz
