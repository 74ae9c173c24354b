#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zerofree/interval.hpp"
#include "zerofree/primes.hpp"

namespace zf {

using cplx = std::complex<double>;

// P(t) = sum_n c_n e^{i t phi_n}, phases pairwise distinct.
class DirichletPoly {
public:
    DirichletPoly(std::vector<double> phases, std::vector<cplx> coeffs);

    // Unit coefficients, phases log p over N1 <= p <= N2.
    static DirichletPoly prime_poly(const PrimeTable& table, double n1, double n2);

    const std::vector<double>& phases() const { return phases_; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    std::size_t size() const { return phases_.size(); }

    // sup_n |phi_n|
    double phi_max() const { return phi_max_; }

    double coeff_norm_sq() const;          // sum |c_n|^2
    double weighted_norm_sq() const;       // sum |c_n|^2 phi_n^2

    cplx eval(double t) const;
    cplx eval_shifted(double theta, double t) const { return eval(theta + t); }

    // d(s,t) = (2 sum |c_n|^2 sin^2((t-s) phi_n / 2))^{1/2}
    double metric_d(double s, double t) const;

    // sum |c_n| |phi_n|; Lipschitz constant of t -> |P(t)|.
    double derivative_bound() const;

private:
    std::vector<double> phases_;
    std::vector<cplx> coeffs_;
    double phi_max_;
};

// sum_{N1 <= p <= N2} e^{-i tau log p}
cplx prime_sum(const PrimeTable& table, double n1, double n2, double tau);

// Two-sided enclosure of sup_{t in [a,b]} |P(t)| from a uniform grid plus
// the Lipschitz bound: true sup lies in [lower, upper].
struct SupCertificate {
    Interval interval;
    double grid_step = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double lipschitz = 0.0;
    double argmax_t = 0.0;
    std::uint64_t points = 0;
    bool budget_exceeded = false;
};

struct SupOptions {
    std::uint64_t max_points = 20'000'000;
    int workers = 0; // 0 = default
};

// Certificate with upper - lower <= eps, unless the point budget forces a
// coarser grid (then budget_exceeded is set and the achieved gap reported).
SupCertificate certified_sup(const DirichletPoly& poly, Interval L, double eps,
                             const SupOptions& opts = {});

// Grid supremum of the prime family of Eq-style subinterval sums:
//   sup over admissible prime blocks [p_a, p_b] (p_b <= 2 p_a) within
//   [U, U^{1+delta}] and t on an anchored grid of L of |S_b - S_{a-1}|,
//   with S_k the prefix sums of e^{-i (theta+t) log p}.
struct FamilySup {
    double lower = 0.0;     // grid maximum
    double upper = 0.0;     // lower + lipschitz * cover radius
    double argmax_t = 0.0;
    std::uint64_t argmax_p_first = 0;
    std::uint64_t argmax_p_last = 0;
    double grid_step = 0.0;
    double lipschitz = 0.0;
    std::uint64_t prime_count = 0;
    std::uint64_t points = 0;
    bool budget_exceeded = false;
};

struct FamilySupOptions {
    double eps = 0.05;      // target enclosure gap, drives the grid step
    std::uint64_t max_points = 1 << 22;
    int workers = 0;
};

// The t-grid uses multiples of a power-of-two step anchored at 0, so
// widening L or delta never loses previously evaluated points (the
// reported lower bound is monotone under widening once the step is
// below the interval length).
FamilySup family_sup(const PrimeTable& table, double theta, double U, double delta, Interval L,
                     const FamilySupOptions& opts = {});

} // namespace zf
