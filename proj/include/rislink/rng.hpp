#pragma once

#include <cstdint>

namespace rislink {

// splitmix64 step; used both as a generator for seeding and as a mixing
// function to derive independent streams from (seed, stream index) pairs.
inline uint64_t splitmix64_next(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Collapses (seed, stream) into a single well-mixed 64-bit value so distinct
// streams get unrelated generator states.
inline uint64_t derive_stream_seed(uint64_t seed, uint64_t stream) {
    uint64_t s = seed;
    uint64_t a = splitmix64_next(s);
    s = a ^ (stream * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL);
    splitmix64_next(s);
    return splitmix64_next(s);
}

// xoshiro256++ with splitmix64 state expansion.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64_next(sm);
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t s_[4];
};

}  // namespace rislink
