#pragma once

#include <cstdint>

namespace zf {

// splitmix64; used to derive independent per-index streams from one seed.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Small counter-based generator. Seeding with (seed, index) gives a stream
// that does not depend on how samples are partitioned across workers, and
// the raw uniform avoids the implementation-defined std:: distributions so
// frozen test values stay stable.
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream = 0) {
        uint64_t s = seed;
        (void)splitmix64(s);
        s ^= 0x6a09e667f3bcc909ULL * (stream + 1);
        state_ = splitmix64(s);
        if (state_ == 0) state_ = 0x2545f4914f6cdd1dULL;
    }

    uint64_t next_u64() { return splitmix64(state_); }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [a, b)
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // uniform integer in [0, n)
    uint64_t below(uint64_t n) { return next_u64() % n; }

private:
    uint64_t state_;
};

} // namespace zf
