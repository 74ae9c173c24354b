#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zf {

// Immutable table of the primes up to `limit`. Safe for concurrent reads.
class PrimeTable {
public:
    static PrimeTable sieve(uint64_t limit);

    uint64_t limit() const { return limit_; }
    const std::vector<uint64_t>& primes() const { return primes_; }

    // pi(n) = number of primes <= n, for n <= limit.
    uint64_t prefix_count(uint64_t n) const;

    // Primes p with lo <= p <= hi, inclusive on both ends.
    // Throws range_exceeds_table when hi > limit.
    std::span<const uint64_t> primes_in(double lo, double hi) const;

    // Natural logs of primes_in(lo, hi), strictly increasing.
    std::vector<double> log_phases(double lo, double hi) const;

    // n-th prime, 1-based. Throws range_exceeds_table when n > pi(limit).
    uint64_t nth_prime(uint64_t n) const;

    // Flat binary cache: u64 count followed by that many u64 primes.
    void save_cache(const std::string& path) const;
    static PrimeTable load_cache(const std::string& path);

    // Cache path for a given limit under dir, or "" when dir is empty.
    static std::string cache_path(const std::string& dir, uint64_t limit);

    // sieve() that reuses an on-disk cache when dir is nonempty.
    static PrimeTable sieve_cached(uint64_t limit, const std::string& dir);

private:
    PrimeTable() = default;
    uint64_t limit_ = 0;
    std::vector<uint64_t> primes_;
};

} // namespace zf
