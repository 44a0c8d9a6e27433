#ifndef ISOWEIGHT_RNG_HPP
#define ISOWEIGHT_RNG_HPP

#include <cstdint>
#include <initializer_list>

namespace isoweight::rng {

// Splittable deterministic generator (splitmix64 seeding + xoshiro256**).
// Distributions are hand-rolled from the raw 64-bit stream so sweeps
// reproduce bit-for-bit across platforms and thread counts.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from a base seed and a path of
/// indices (family, weight, case, ...).
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = base ^ 0xd1b54a32d192ed03ULL;
    std::uint64_t out = splitmix64(s);
    for (std::uint64_t p : path) {
        s ^= splitmix64(s) + p;
        out = splitmix64(s);
    }
    return out;
}

class Xoshiro256ss {
  public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        for (auto& word : s_) word = splitmix64(seed);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, 1), 53 bits.
    double uniform01() { return (double)(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

} // namespace isoweight::rng

#endif
