#include "zerofree/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "zerofree/errors.hpp"

namespace zf {

namespace {

// Plain sieve of Eratosthenes, fine up to ~1e7.
std::vector<uint64_t> simple_sieve(uint64_t limit) {
    std::vector<uint8_t> is_prime(limit + 1, 1);
    is_prime[0] = 0;
    if (limit >= 1) is_prime[1] = 0;
    for (uint64_t i = 2; i * i <= limit; ++i)
        if (is_prime[i])
            for (uint64_t j = i * i; j <= limit; j += i) is_prime[j] = 0;
    std::vector<uint64_t> out;
    for (uint64_t n = 2; n <= limit; ++n)
        if (is_prime[n]) out.push_back(n);
    return out;
}

constexpr uint64_t kSegmentedThreshold = 10'000'000;
constexpr uint64_t kSegmentSize = 1 << 20;

// Segmented sieve keeps memory at O(sqrt(limit) + segment) for large limits.
std::vector<uint64_t> segmented_sieve(uint64_t limit) {
    const uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<uint64_t> base = simple_sieve(root);

    std::vector<uint64_t> out;
    out.reserve(static_cast<size_t>(1.2 * limit / std::log(static_cast<double>(limit))));

    std::vector<uint8_t> seg(kSegmentSize);
    for (uint64_t low = 2; low <= limit; low += kSegmentSize) {
        const uint64_t high = std::min(low + kSegmentSize - 1, limit);
        std::fill(seg.begin(), seg.begin() + (high - low + 1), 1);
        for (uint64_t p : base) {
            if (p * p > high) break;
            uint64_t start = std::max(p * p, (low + p - 1) / p * p);
            for (uint64_t j = start; j <= high; j += p) seg[j - low] = 0;
        }
        for (uint64_t n = low; n <= high; ++n)
            if (seg[n - low]) out.push_back(n);
    }
    return out;
}

} // namespace

PrimeTable PrimeTable::sieve(uint64_t limit) {
    if (limit < 2) throw std::invalid_argument("sieve: limit must be at least 2");
    PrimeTable t;
    t.limit_ = limit;
    t.primes_ = limit <= kSegmentedThreshold ? simple_sieve(limit) : segmented_sieve(limit);
    return t;
}

uint64_t PrimeTable::prefix_count(uint64_t n) const {
    if (n > limit_) throw range_exceeds_table("prefix_count: n exceeds table limit");
    auto it = std::upper_bound(primes_.begin(), primes_.end(), n);
    return static_cast<uint64_t>(it - primes_.begin());
}

std::span<const uint64_t> PrimeTable::primes_in(double lo, double hi) const {
    if (hi > static_cast<double>(limit_))
        throw range_exceeds_table("primes_in: hi exceeds table limit");
    if (lo > hi) return {};
    auto first = std::lower_bound(primes_.begin(), primes_.end(), lo,
                                  [](uint64_t p, double v) { return static_cast<double>(p) < v; });
    auto last = std::upper_bound(primes_.begin(), primes_.end(), hi,
                                 [](double v, uint64_t p) { return v < static_cast<double>(p); });
    if (first >= last) return {};
    return {&*first, static_cast<size_t>(last - first)};
}

std::vector<double> PrimeTable::log_phases(double lo, double hi) const {
    auto ps = primes_in(lo, hi);
    std::vector<double> out;
    out.reserve(ps.size());
    for (uint64_t p : ps) out.push_back(std::log(static_cast<double>(p)));
    return out;
}

uint64_t PrimeTable::nth_prime(uint64_t n) const {
    if (n == 0 || n > primes_.size())
        throw range_exceeds_table("nth_prime: index outside table");
    return primes_[n - 1];
}

void PrimeTable::save_cache(const std::string& path) const {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw std::runtime_error("save_cache: cannot open " + path);
    uint64_t count = primes_.size();
    bool ok = std::fwrite(&count, sizeof(count), 1, f) == 1;
    ok = ok && (count == 0 ||
                std::fwrite(primes_.data(), sizeof(uint64_t), primes_.size(), f) == primes_.size());
    std::fclose(f);
    if (!ok) throw std::runtime_error("save_cache: short write to " + path);
}

PrimeTable PrimeTable::load_cache(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw std::runtime_error("load_cache: cannot open " + path);
    uint64_t count = 0;
    bool ok = std::fread(&count, sizeof(count), 1, f) == 1;
    PrimeTable t;
    t.primes_.resize(count);
    ok = ok && (count == 0 ||
                std::fread(t.primes_.data(), sizeof(uint64_t), count, f) == count);
    std::fclose(f);
    if (!ok || count == 0) throw std::runtime_error("load_cache: corrupt cache " + path);
    t.limit_ = t.primes_.back();
    return t;
}

std::string PrimeTable::cache_path(const std::string& dir, uint64_t limit) {
    if (dir.empty()) return {};
    return dir + "/primes_" + std::to_string(limit) + ".bin";
}

PrimeTable PrimeTable::sieve_cached(uint64_t limit, const std::string& dir) {
    const std::string path = cache_path(dir, limit);
    if (!path.empty()) {
        if (std::FILE* f = std::fopen(path.c_str(), "rb")) {
            std::fclose(f);
            PrimeTable t = load_cache(path);
            // A cache written for this limit ends below it; keep the key as limit.
            t.limit_ = std::max(t.limit_, limit);
            return t;
        }
    }
    PrimeTable t = sieve(limit);
    if (!path.empty()) t.save_cache(path);
    return t;
}

} // namespace zf
