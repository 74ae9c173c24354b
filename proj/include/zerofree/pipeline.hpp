#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zerofree/dirichlet.hpp"
#include "zerofree/interval.hpp"
#include "zerofree/primes.hpp"
#include "zerofree/rational.hpp"

namespace zf {

// The full parameter vector of the construction, exact rationals where the
// quantity is rational. With H in [2,8]:
//   delta = (H-1)/(8H), q = 5H, B = 4 q delta + 2(delta+1), b = delta/(2B),
//   U = 2^nu, J = [U^{2B}, 2 U^{2B}], L = [U^B, 8 U^B].
struct ParameterSet {
    int H = 0;
    Rat delta;
    int q = 0;
    Rat B;
    Rat two_B;
    Rat b;
    long nu = 0;
    double U = 0.0;
    Interval J;
    Interval L;
    double delta0 = 0.0;
    bool delta0_defaulted = true;
    double D = 0.0; // 1 / (2B (1 - delta0))
    double alpha = 0.0;
    double mu_alpha = 0.0;      // (1-alpha)^{-1/(2q)}
    double delta0_pow12 = 0.0;  // sigma0 = 1 - delta0_pow12; kept separately
    double sigma0 = 0.0;        // because the difference underflows near 1
    double cq = 1.0;
    double c = 0.0;             // 2 mu_alpha cq
    double alpha_bar = 0.0;
    double alpha_star = 0.0;
    long nu_delta = 0;          // smallest nu with 2^{nu (delta - 2 delta0/(1-delta0))} >= 7^{1+delta}
};

struct DeriveOptions {
    std::optional<double> delta0;
    std::optional<double> alpha_star; // default: alpha_bar
    double cq = 1.0;
};

// Throws constraint_violation naming the failed inequality.
ParameterSet derive_params(int H, long nu, double alpha, const DeriveOptions& opts = {});

struct InvariantCheck {
    std::string name;
    bool exact = false; // checked in rational arithmetic, zero tolerance
    bool pass = false;
    std::string detail;
};

// Re-verifies every algebraic identity/inequality of the parameter block.
std::vector<InvariantCheck> check_invariants(const ParameterSet& p);

// M = 2 Cq 2^{(1-delta) nu} nu^{1/(2q) - 1/2}
double M_bound(const ParameterSet& p, double cq);

// psi(theta) = theta + 3 sqrt(theta), strictly increasing on [0, inf).
double psi(double theta);

// 1 - (1 + 2^{-B nu}) (1 - alpha) / (1 + 3 (sqrt 2 - 1) 2^{-B nu})
double alpha_bar_value(const Rat& B, long nu, double alpha);

struct ThetaSample {
    double theta = 0.0;
    double sup_lower = 0.0;
    double sup_upper = 0.0;
    bool good = false;
};

struct ThetaSetEstimate {
    uint64_t samples = 0;
    double threshold = 0.0;       // mu(alpha) * M unless overridden
    double hit_fraction = 0.0;    // fraction with sup_lower <= threshold
    double hit_fraction_upper = 0.0; // fraction certified via sup_upper
    double predicted_lower = 0.0; // alpha
    bool analysis_only = false;   // scale beyond table/cap, nothing sampled
    uint64_t seed = 0;
    std::vector<ThetaSample> detail;
};

struct ThetaOptions {
    std::optional<double> threshold_override;
    double feasibility_cap = 1e8;
    double family_eps = 1e-3;
    int workers = 0;
    bool keep_detail = true;
};

ThetaSetEstimate estimate_theta_set(const ParameterSet& p, const PrimeTable& table,
                                    uint64_t samples, uint64_t seed,
                                    const ThetaOptions& opts = {});

// c N (log N)^10 / tau^beta
double turan_rhs(double N, double tau, double beta, double c);

enum class TuranRhsMode {
    criterion, // (log N)^10, the localization criterion's shape
    chained,   // (log N)^{1/(2q) - 1/2}, the shape the supremum bound yields
};

struct TuranRow {
    double N = 0.0;
    double N1 = 0.0;
    double N2 = 0.0;
    double tau = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
};

struct TuranReport {
    double theta = 0.0;
    double T = 0.0;             // psi(theta)
    Interval tau_window;        // [T - sqrt T, T + sqrt T]
    Interval N_window;          // [T^{D(1-delta0)}, T^{D(1+delta0)}]
    TuranRhsMode mode = TuranRhsMode::chained;
    double c = 0.0;
    double tau_exponent = 0.0;  // delta0^6
    bool premises_hold = false; // nu >= nu_delta
    bool analysis_only = false;
    std::vector<TuranRow> rows;
    double pass_fraction = 0.0;
};

struct ScanOptions {
    double feasibility_cap = 1e8;
    int workers = 0;
};

TuranReport turan_scan(const ParameterSet& p, const PrimeTable& table, double theta,
                       uint32_t tau_grid, TuranRhsMode mode, const ScanOptions& opts = {});

struct CoveringResult {
    uint64_t n_cells = 0;     // ceil(2^{B nu + 1} + 6 (sqrt 2 - 1))
    double total_real = 0.0;  // 2^{B nu + 1} + 6 (sqrt 2 - 1)
    double origin = 0.0;      // psi(J.lo)
    double cell_width = 0.0;  // 2^{B nu - 1}
    uint64_t hit_count = 0;   // cells meeting psi(good set)
    double alpha_bar_threshold = 0.0;  // alpha_bar * total_real
    bool meets_alpha_bar = false;
    double alpha_star_threshold = 0.0; // alpha_star * 2^{B nu + 1}
    bool meets_alpha_star = false;
    std::vector<uint8_t> hit; // per-cell flags
};

// Counts subdivision cells of psi(J) that contain some psi(theta) with theta
// in the good set. Throws invalid_argument when a theta falls outside J.
CoveringResult covering_subdivision(const ParameterSet& p, const std::vector<double>& good_thetas);

// Window containment of the tau window in theta + L (holds for every theta
// in J once nu >= 4).
bool tau_window_in_shifted_L(const ParameterSet& p, double theta);

// log-space check of T^{D(1+delta0)} <= (T/7)^{(1+delta)/(2B)} at psi(theta).
bool range_nesting_upper_ok(const ParameterSet& p, double log_theta);

} // namespace zf
