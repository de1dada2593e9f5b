#ifndef MATSLOCC_RNG_HPP
#define MATSLOCC_RNG_HPP

#include <cstdint>

namespace matslocc {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic per-task RNG stream. Streams with distinct (seed, index)
/// pairs are independent, so trials can be farmed out to threads and still
/// reproduce the sequential result bit for bit.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_index) {
        std::uint64_t s = seed;
        std::uint64_t mix = splitmix64(s) ^ (stream_index * 0xd2b74407b1ce6e93ULL);
        state_ = mix ^ 0x8f1bbcdcbfa53e0bULL;
        // warm up so nearby stream indices decorrelate
        next_u64();
        next_u64();
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform over [0, bound) by rejection.
    std::uint64_t uniform_below(std::uint64_t bound) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do { x = next_u64(); } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
};

} // namespace matslocc

#endif
