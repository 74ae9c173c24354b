#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zerofree/dirichlet.hpp"
#include "zerofree/interval.hpp"
#include "zerofree/primes.hpp"

namespace zf {

struct HilbertResult {
    cplx value;      // sum_{m != n} x_m conj-free y_n / (lambda_m - lambda_n)
    double bound;    // (pi / delta) ||x|| ||y||
    double min_gap;  // delta
    bool pass;       // |value| <= bound (1 + 1e-9)
};

// Direct double-sum bilinear form; throws invalid_argument on duplicate lambdas.
HilbertResult hilbert_form(const std::vector<double>& lambdas, const std::vector<cplx>& x,
                           const std::vector<cplx>& y);

struct MomentEstimate {
    double value = 0.0;        // normalized 2q-th moment from quadrature
    double quad_error = 0.0;   // |full - half resolution|
    double bound = 0.0;
    double margin = 0.0;       // bound - value; negative beyond quad_error = alarm
    double xi = 0.0;           // spacing coefficient used in the bound
    bool xi_lower_bound = false; // true when the p_N^{-q} fallback was used
    uint64_t panels = 0;
};

struct MomentOptions {
    uint64_t eq_budget = 1'000'000;
    int quad_order = 8;
    int workers = 0;
};

// Panels needed so a panel spans at most pi/(4 q phi_max) of J.
uint64_t oscillation_safe_panels(double interval_length, uint32_t q, double phi_max);

// xi for the poly's phases: exact within budget, else the prime-phase
// p_max^{-q} lower bound when every phase is the log of a prime (this only
// enlarges the moment bounds). Throws budget_exceeded otherwise.
struct XiValue {
    double value;
    bool lower_bound;
};
XiValue xi_for_poly(const DirichletPoly& poly, uint32_t q, uint64_t budget = 1'000'000);

// (1/|J|) int_J |P(theta+t) - P(theta+s)|^{2q} dtheta
// vs (q! + 2 min(N^q, pi q!) / (|J| xi)) (2 d(s,t)^2)^q, the increment
// l2-norm form (2 d^2 = sum |c_n|^2 |e^{i t phi_n} - e^{i s phi_n}|^2).
MomentEstimate moment_increment(const DirichletPoly& poly, Interval J, uint32_t q, double s,
                                double t, uint64_t resolution, const MomentOptions& opts = {});

// (1/|J|) int_J |P(theta)|^{2q} dtheta vs (q! + 2 min(N^q, pi q!)/(|J| xi)) (sum |c|^2)^q.
MomentEstimate moment_plain(const DirichletPoly& poly, Interval J, uint32_t q,
                            uint64_t resolution, const MomentOptions& opts = {});

// (1/2T) int_{-T}^{T} |sum_{p <= Nmax} c_p p^{-i theta}|^{2q} dtheta
// vs q! (1 + 2 pi Nmax^q / T) (sum |c_p|^2)^q.
MomentEstimate cor22_check(const PrimeTable& table, const std::vector<cplx>& coeffs, double Nmax,
                           double T, uint32_t q, uint64_t resolution,
                           const MomentOptions& opts = {});

// [q! (1 + 2 pi / (|J| xi))]^{1/2q}
double moment_factor(const DirichletPoly& poly, Interval J, uint32_t q,
                     uint64_t eq_budget = 1'000'000);

// Cq * factor * max(1, |L| phi_max)^{1/2q}
//    * { ||c||_2 + min(|L|, 1/phi_max) (sum |c|^2 phi^2)^{1/2} }
double thm23_bound(const DirichletPoly& poly, Interval J, Interval L, uint32_t q, double cq,
                   uint64_t eq_budget = 1'000'000);

// Monte-Carlo estimate of || sup_{t in L} |P_theta(t)| ||_{m_J, 2q} using
// certified upper bounds per theta sample.
double empirical_sup_norm(const DirichletPoly& poly, Interval J, Interval L, uint32_t q,
                          uint32_t theta_samples, uint64_t seed, double sup_eps = 1e-3,
                          int workers = 0);

struct ChainCalibration {
    uint32_t q = 0;
    double cq = 0.0;          // smallest constant covering the suite
    uint32_t trials = 0;
    uint64_t seed = 0;
    double worst_ratio = 0.0; // == cq
    uint32_t worst_index = 0;
};

// Seeded suite of random prime-phase polynomials; cq = max over the suite of
// empirical_sup_norm / thm23_bound(Cq=1).
ChainCalibration calibrate_cq(const PrimeTable& table, uint32_t q, uint32_t trials, uint64_t seed,
                              int workers = 0);

// Deterministic random poly used by the calibration suite (exposed so tests
// can replay instances).
DirichletPoly calibration_poly(const PrimeTable& table, uint32_t index, uint64_t seed);

} // namespace zf
