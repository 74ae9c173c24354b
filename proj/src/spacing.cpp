#include "zerofree/spacing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "zerofree/errors.hpp"

namespace zf {

namespace mp = boost::multiprecision;

uint64_t eq_size(uint32_t N, uint32_t q, uint64_t budget) {
    if (N == 0) throw std::invalid_argument("eq_size: N must be positive");
    // C(q+N-1, N-1), bailing out as soon as the budget is passed. The
    // running product C(n-k+i, i) is monotone in i, so an early overshoot
    // is final.
    const uint64_t n = q + N - 1;
    const uint64_t k = std::min<uint64_t>(N - 1, q);
    uint64_t size = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        mp::uint128_t wide = mp::uint128_t(size) * (n - k + i) / i;
        if (wide > mp::uint128_t(budget))
            throw budget_exceeded("eq_size: |E_q| exceeds budget");
        size = static_cast<uint64_t>(wide);
    }
    return size;
}

namespace {

void compose(uint32_t pos, uint32_t remaining, MultiIndex& cur, std::vector<MultiIndex>& out) {
    const uint32_t N = static_cast<uint32_t>(cur.size());
    if (pos + 1 == N) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (uint32_t e = 0; e <= remaining; ++e) {
        cur[pos] = e;
        compose(pos + 1, remaining - e, cur, out);
    }
}

} // namespace

std::vector<MultiIndex> enumerate_Eq(uint32_t N, uint32_t q, uint64_t budget) {
    const uint64_t size = eq_size(N, q, budget);
    std::vector<MultiIndex> out;
    out.reserve(size);
    MultiIndex cur(N, 0);
    compose(0, q, cur, out);
    return out;
}

XiResult xi_exact(const std::vector<double>& phases, uint32_t q, uint64_t budget) {
    const uint32_t N = static_cast<uint32_t>(phases.size());
    if (N == 0 || q == 0) throw std::invalid_argument("xi_exact: need N >= 1 and q >= 1");
    auto indices = enumerate_Eq(N, q, budget);

    XiResult res;
    if (indices.size() < 2) {
        res.value = std::numeric_limits<double>::infinity();
        return res;
    }

    std::vector<std::pair<double, uint64_t>> vals(indices.size());
    for (uint64_t i = 0; i < indices.size(); ++i) {
        double dot = 0.0;
        for (uint32_t n = 0; n < N; ++n) dot += static_cast<double>(indices[i][n]) * phases[n];
        vals[i] = {dot, i};
    }
    std::sort(vals.begin(), vals.end());

    double best = std::numeric_limits<double>::infinity();
    uint64_t bi = 0, bj = 1;
    for (uint64_t i = 0; i + 1 < vals.size(); ++i) {
        const double gap = vals[i + 1].first - vals[i].first;
        if (gap < best) {
            best = gap;
            bi = vals[i].second;
            bj = vals[i + 1].second;
        }
    }
    if (best < 1e-13)
        throw degenerate_phases("xi_exact: zero minimum, phases are not linearly independent");
    res.value = best;
    res.h = indices[bj];
    res.k = indices[bi];
    return res;
}

double xi_prime_lower_bound(const PrimeTable& table, uint32_t N, uint32_t q) {
    const uint64_t p = table.nth_prime(N);
    return std::exp(-static_cast<double>(q) * std::log(static_cast<double>(p)));
}

namespace {

// gcc 11 misreads cpp_int's inlined limb memcpy bounds at -O2
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wstringop-overflow"
#pragma GCC diagnostic ignored "-Wstringop-overread"
double log_big(const mp::cpp_int& x) {
    const unsigned bits = static_cast<unsigned>(mp::msb(x)) + 1;
    if (bits <= 512) return std::log(x.convert_to<double>());
    const unsigned shift = bits - 64;
    mp::cpp_int top = x;
    top >>= shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}
#pragma GCC diagnostic pop

} // namespace

double prime_log_form_exact(const std::vector<uint64_t>& primes, const std::vector<int64_t>& l) {
    if (primes.size() != l.size())
        throw std::invalid_argument("prime_log_form_exact: length mismatch");
    mp::cpp_int pos = 1, neg = 1;
    for (std::size_t n = 0; n < l.size(); ++n) {
        for (int64_t e = 0; e < std::abs(l[n]); ++e) {
            if (l[n] > 0)
                pos *= primes[n];
            else
                neg *= primes[n];
        }
    }
    if (pos == neg)
        throw degenerate_phases("prime_log_form_exact: P+ equals P-");
    return log_big(pos) - log_big(neg);
}

} // namespace zf
