#pragma once

#include <cstdint>
#include <vector>

#include "zerofree/primes.hpp"

namespace zf {

// k = (k_1, ..., k_N), nonnegative entries summing to q.
using MultiIndex = std::vector<uint32_t>;

// |E_q| = C(q+N-1, N-1); throws budget_exceeded past the cap.
uint64_t eq_size(uint32_t N, uint32_t q, uint64_t budget = 1'000'000);

// All compositions of q into N nonnegative parts, ascending lexicographic.
std::vector<MultiIndex> enumerate_Eq(uint32_t N, uint32_t q, uint64_t budget = 1'000'000);

struct XiResult {
    double value = 0.0;   // inf over distinct pairs of |<h-k, phi>|
    MultiIndex h;         // a minimizing pair
    MultiIndex k;
};

// Exact linear-spacing coefficient over all unordered pairs of E_q.
// Computed as the minimal adjacent gap of the sorted dot values, which
// covers every pair. Throws degenerate_phases when the minimum sits below
// 1e-13 (phases failed the independence assumption) and budget_exceeded
// when |E_q| is out of budget. Returns +inf when |E_q| < 2.
XiResult xi_exact(const std::vector<double>& phases, uint32_t q, uint64_t budget = 1'000'000);

// p_N^{-q}, the prime-phase lower bound for xi.
double xi_prime_lower_bound(const PrimeTable& table, uint32_t N, uint32_t q);

// log(P+/P-) for l = h - k over the given primes, with P+ = prod p^{l>0}
// and P- = prod p^{-l<0} formed exactly in big integers. Throws
// degenerate_phases when P+ == P-.
double prime_log_form_exact(const std::vector<uint64_t>& primes, const std::vector<int64_t>& l);

} // namespace zf
