#pragma once

// Deterministic random streams for the replication studies. Streams are
// derived by hashing (master_seed, cell, replication), so every replication
// gets the same substream no matter how work is scheduled across threads.

#include <array>
#include <cstdint>

namespace heavytail {

namespace detail {

// splitmix64 finalizer; also usable as a stateless 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    return mix64(state);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace detail

// xoshiro256++ stream seeded through splitmix64.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_)
            word = detail::splitmix64_next(sm);
        // the all-zero state is the one and only invalid xoshiro state
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
            state_[0] = 0x9e3779b97f4a7c15ull;
    }

    // Stream for replication j of cell i under the given master seed.
    static RandomStream substream(std::uint64_t master_seed,
                                  std::uint64_t cell,
                                  std::uint64_t replication) {
        std::uint64_t key = master_seed;
        key = detail::mix64(key ^ (cell + 0x9e3779b97f4a7c15ull));
        key = detail::mix64(key ^ (replication + 0xc2b2ae3d27d4eb4full));
        return RandomStream(key);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result =
            detail::rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl(state_[3], 45);
        return result;
    }

    // Uniform draw strictly inside (0,1): all 2^53 grid midpoints are interior.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
    }

private:
    std::array<std::uint64_t, 4> state_;
};

} // namespace heavytail
