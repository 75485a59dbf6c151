#ifndef LATMESH_RNG_HPP
#define LATMESH_RNG_HPP

#include <cstdint>

namespace latmesh {

// Counter-based generator (splitmix64 of seed ^ counter stream).
// Same (seed, index) always gives the same value on every platform and
// thread count, which is what the randomized suites need.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1))) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t next_below(std::uint64_t n) {
        return n ? next_u64() % n : 0;
    }

    // uniform in [lo, hi] inclusive
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // uniform in [0,1) with 53 random bits (exactly representable)
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

} // namespace latmesh

#endif
