#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zerofree/interval.hpp"

namespace zf {

using cplx = std::complex<double>;

struct ZetaSample {
    cplx s;
    cplx value;
    double err = 0.0; // truncation bound for the tail terms
};

// Euler-Maclaurin evaluation with `terms` summed directly and
// `bernoulli_order` correction terms (1..14); err is the classical bound
// |s+2K+1|/(sigma+2K+1) times the first omitted term. Throws on s = 1.
ZetaSample zeta_em(cplx s, uint32_t terms, uint32_t bernoulli_order);

// Picks the number of terms so err <= tol; throws accuracy_unreachable
// (carrying the achieved err) when the term budget runs out.
ZetaSample zeta_auto(cplx s, double tol, uint32_t max_terms = 4'000'000);

// Riemann-Siegel theta, asymptotic expansion; good to ~1e-9 for t >= 2.
double rs_theta(double t);

// Z(t) = e^{i theta(t)} zeta(1/2 + it), computed from zeta_auto; the
// rotation leaves an imaginary residue that reports the combined error.
double hardy_Z(double t, double* im_residue = nullptr);

// Riemann-Siegel main sum with the leading correction term; independent
// cross-check of hardy_Z, error O(t^{-3/4}).
double hardy_Z_rs(double t);

struct ZeroCount {
    uint64_t count = 0;        // sign changes of Z on (2, T]
    double main_term = 0.0;    // (T/2pi) log(T/2pi) - T/2pi + 7/8
    bool within_main_term = false; // |count - main_term| <= 1
    bool resolution_warning = false;
    double grid_step = 0.0;
};

struct ZeroCountOptions {
    double desk_cap = 1e4;
    int workers = 0;
};

// Sign-change count; a lower bound for the true zero count.
ZeroCount count_zeros(double T, double grid_step, const ZeroCountOptions& opts = {});

struct BoxScanReport {
    double sigma_lo = 0.0;
    double sigma_hi = 1.2;
    Interval t_interval;
    uint32_t grid = 0;       // points per axis
    double min_abs = 0.0;    // min |zeta| over the box grid
    cplx argmin_s;
    double max_err = 0.0;
    double floor = 0.0;      // resolution+error floor for the verdict
    uint64_t critical_line_zeros = 0;
    bool consistent = false; // heuristic verdict: min_abs > floor
    bool diagnostic = false; // sigma_lo <= 1/2, zero-free claim not applicable
    bool analysis_only = false;
    std::vector<ZetaSample> samples; // filled when keep_samples is set
};

struct BoxScanOptions {
    double desk_cap = 1e4;
    int workers = 0;
    bool keep_samples = false;
};

// Grid minimum of |zeta| over [sigma0, 1.2] x t_interval plus the count of
// critical-line zeros inside t_interval. Verdicts are heuristic (grid plus
// truncation floor), never a proof.
BoxScanReport box_zero_scan(double sigma0, Interval t_interval, uint32_t grid,
                            const BoxScanOptions& opts = {});

} // namespace zf
