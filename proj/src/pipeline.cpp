#include "zerofree/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zerofree/errors.hpp"
#include "zerofree/parallel.hpp"
#include "zerofree/rng.hpp"

namespace zf {

namespace {

double exp2_rat(const Rat& r) { return std::exp2(r.to_double()); }

long smallest_nu_for_range(const Rat& delta, double delta0) {
    // smallest nu with 2^{nu g} >= 7^{1+delta}, g = delta - 2 delta0/(1-delta0)
    const double g = delta.to_double() - 2.0 * delta0 / (1.0 - delta0);
    if (!(g > 0.0)) return -1;
    const double target = (1.0 + delta.to_double()) * std::log2(7.0);
    long nu = static_cast<long>(std::ceil(target / g));
    while (static_cast<double>(nu - 1) * g >= target && nu > 1) --nu;
    while (static_cast<double>(nu) * g < target) ++nu;
    return nu;
}

} // namespace

ParameterSet derive_params(int H, long nu, double alpha, const DeriveOptions& opts) {
    if (H < 2 || H > 8)
        throw constraint_violation("derive_params: H must satisfy 2 <= H <= 8 (H < 9)");
    if (nu < 1) throw constraint_violation("derive_params: nu must be a positive integer");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw constraint_violation("derive_params: alpha must lie in (0,1)");

    ParameterSet p;
    p.H = H;
    p.delta = Rat(H - 1, 8LL * H);
    p.q = 5 * H;
    p.B = Rat(4) * Rat(p.q) * p.delta + Rat(2) * (p.delta + Rat(1));
    p.two_B = Rat(2) * p.B;
    p.b = p.delta / p.two_B;
    p.nu = nu;

    // delta0 must satisfy 0 < 2 delta0/(1-delta0) < delta and delta0 <= b^{1/6};
    // the first gives delta0 < delta/(2+delta). Default sits just inside.
    const double d0_sup = (p.delta / (Rat(2) + p.delta)).to_double();
    const double b_sixth = std::pow(p.b.to_double(), 1.0 / 6.0);
    if (opts.delta0) {
        p.delta0 = *opts.delta0;
        p.delta0_defaulted = false;
        if (!(p.delta0 > 0.0))
            throw constraint_violation("derive_params: delta0 must be positive");
        if (!(2.0 * p.delta0 / (1.0 - p.delta0) < p.delta.to_double()))
            throw constraint_violation(
                "derive_params: constraint 2*delta0/(1-delta0) < delta violated");
        if (!(p.delta0 <= b_sixth))
            throw constraint_violation("derive_params: constraint delta0 <= b^{1/6} violated");
    } else {
        p.delta0 = 0.99 * std::min(d0_sup, b_sixth);
    }

    p.U = std::exp2(static_cast<double>(nu));
    const Rat two_B_nu = p.two_B * Rat(nu);
    const Rat B_nu = p.B * Rat(nu);
    p.J.lo = exp2_rat(two_B_nu);
    p.J.hi = 2.0 * p.J.lo;
    p.L.lo = exp2_rat(B_nu);
    p.L.hi = 8.0 * p.L.lo;

    p.D = 1.0 / (p.two_B.to_double() * (1.0 - p.delta0));
    p.alpha = alpha;
    p.mu_alpha = std::pow(1.0 - alpha, -1.0 / (2.0 * p.q));
    p.delta0_pow12 = std::pow(p.delta0, 12.0);
    p.sigma0 = 1.0 - p.delta0_pow12;
    p.cq = opts.cq;
    p.c = 2.0 * p.mu_alpha * p.cq;
    p.alpha_bar = alpha_bar_value(p.B, nu, alpha);
    p.alpha_star = opts.alpha_star.value_or(p.alpha_bar);
    if (!(p.alpha_star > 0.0 && p.alpha_star < 1.0))
        throw constraint_violation("derive_params: alpha_star must lie in (0,1)");
    p.nu_delta = smallest_nu_for_range(p.delta, p.delta0);
    return p;
}

std::vector<InvariantCheck> check_invariants(const ParameterSet& p) {
    std::vector<InvariantCheck> out;
    auto push = [&out](std::string name, bool exact, bool pass, std::string detail = "") {
        out.push_back({std::move(name), exact, pass, std::move(detail)});
    };

    const Rat one(1);
    const Rat delta = p.delta;
    const Rat q(p.q);

    push("delta = (H-1)/(8H)", true, delta == Rat(p.H - 1, 8LL * p.H), delta.str());
    push("q = 5H", true, p.q == 5 * p.H, std::to_string(p.q));
    push("0 < delta < 1/8", true, Rat(0) < delta && delta < Rat(1, 8));
    push("q > 4(delta+1)/(1-8 delta)", true,
         q * (one - Rat(8) * delta) > Rat(4) * (delta + one));
    push("B = 4 q delta + 2(delta+1)", true, p.B == Rat(4) * q * delta + Rat(2) * (delta + one),
         p.B.str());
    push("2B = 8 q delta + 4(delta+1) < q", true,
         p.two_B == Rat(8) * q * delta + Rat(4) * (delta + one) && p.two_B < q, p.two_B.str());
    push("(1+delta)(1+1/q) - B/(2q) = 1 - delta", true,
         (one + delta) * (one + one / q) - p.B / (Rat(2) * q) == one - delta);
    push("B < 5/(2(1-8 delta))", true, p.B * Rat(2) * (one - Rat(8) * delta) < Rat(5));
    push("b = delta/(2B) >= delta(1-8 delta)/5", true,
         p.b == delta / p.two_B && p.b * Rat(5) >= delta * (one - Rat(8) * delta), p.b.str());
    push("H < 9", true, p.H < 9);
    push("0 < 2 delta0/(1-delta0) < delta", false,
         p.delta0 > 0.0 && 2.0 * p.delta0 / (1.0 - p.delta0) < delta.to_double(),
         std::to_string(p.delta0));
    push("delta0 <= b^{1/6}", false, p.delta0 <= std::pow(p.b.to_double(), 1.0 / 6.0));
    push("sigma0 = 1 - delta0^12", false,
         p.sigma0 == 1.0 - p.delta0_pow12 && p.delta0_pow12 > 0.0,
         "delta0^12 = " + std::to_string(p.delta0_pow12));
    return out;
}

double M_bound(const ParameterSet& p, double cq) {
    const double expo = (1.0 - p.delta.to_double()) * static_cast<double>(p.nu);
    const double nu_pow = std::pow(static_cast<double>(p.nu),
                                   1.0 / (2.0 * p.q) - 0.5);
    return 2.0 * cq * std::exp2(expo) * nu_pow;
}

double psi(double theta) {
    if (theta < 0.0) throw std::invalid_argument("psi: negative input");
    return theta + 3.0 * std::sqrt(theta);
}

double alpha_bar_value(const Rat& B, long nu, double alpha) {
    const double w = std::exp2(-(B * Rat(nu)).to_double());
    return 1.0 - (1.0 + w) * (1.0 - alpha) / (1.0 + 3.0 * (std::sqrt(2.0) - 1.0) * w);
}

ThetaSetEstimate estimate_theta_set(const ParameterSet& p, const PrimeTable& table,
                                    uint64_t samples, uint64_t seed, const ThetaOptions& opts) {
    if (samples == 0) throw std::invalid_argument("estimate_theta_set: samples must be positive");

    ThetaSetEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.predicted_lower = p.alpha;
    est.threshold = opts.threshold_override.value_or(p.mu_alpha * M_bound(p, p.cq));

    const double delta = p.delta.to_double();
    const double needed = std::pow(p.U, 1.0 + delta);
    if (needed > static_cast<double>(table.limit()) || needed > opts.feasibility_cap ||
        p.J.hi > opts.feasibility_cap) {
        est.analysis_only = true;
        est.samples = 0;
        return est;
    }

    std::vector<ThetaSample> rows(samples);
    const int workers = opts.workers > 0 ? opts.workers : default_workers();
    parallel_for(samples, workers, [&](std::size_t i) {
        Rng rng(seed, i);
        ThetaSample& row = rows[i];
        row.theta = rng.uniform(p.J.lo, p.J.hi);
        FamilySupOptions fopts;
        fopts.eps = std::max(opts.family_eps, 0.02 * est.threshold);
        fopts.workers = 1;
        const FamilySup fam = family_sup(table, row.theta, p.U, delta, p.L, fopts);
        row.sup_lower = fam.lower;
        row.sup_upper = fam.upper;
        row.good = fam.lower <= est.threshold;
    });

    uint64_t good = 0, good_upper = 0;
    for (const auto& r : rows) {
        good += r.good ? 1 : 0;
        good_upper += r.sup_upper <= est.threshold ? 1 : 0;
    }
    est.hit_fraction = static_cast<double>(good) / static_cast<double>(samples);
    est.hit_fraction_upper = static_cast<double>(good_upper) / static_cast<double>(samples);
    if (opts.keep_detail) est.detail = std::move(rows);
    return est;
}

double turan_rhs(double N, double tau, double beta, double c) {
    if (!(N > 1.0)) throw std::invalid_argument("turan_rhs: need N > 1");
    if (!(tau > 0.0)) throw std::invalid_argument("turan_rhs: need tau > 0");
    return c * N * std::pow(std::log(N), 10.0) / std::pow(tau, beta);
}

TuranReport turan_scan(const ParameterSet& p, const PrimeTable& table, double theta,
                       uint32_t tau_grid, TuranRhsMode mode, const ScanOptions& opts) {
    if (!(theta >= 1.0)) throw std::invalid_argument("turan_scan: need theta >= 1");
    if (tau_grid == 0) throw std::invalid_argument("turan_scan: need at least one tau point");

    TuranReport rep;
    rep.theta = theta;
    rep.T = psi(theta);
    const double rootT = std::sqrt(rep.T);
    rep.tau_window = {rep.T - rootT, rep.T + rootT};
    const double lnT = std::log(rep.T);
    rep.N_window = {std::exp(p.D * (1.0 - p.delta0) * lnT), std::exp(p.D * (1.0 + p.delta0) * lnT)};
    rep.mode = mode;
    rep.c = p.c;
    rep.tau_exponent = std::pow(p.delta0, 6.0);
    rep.premises_hold = p.nu_delta > 0 && p.nu >= p.nu_delta;

    if (rep.tau_window.hi > opts.feasibility_cap ||
        rep.N_window.hi > static_cast<double>(table.limit()) ||
        rep.N_window.hi > opts.feasibility_cap) {
        rep.analysis_only = true;
        return rep;
    }

    // Dyadic ladder of blocks [N, min(2N, N_hi)] inside the N window.
    std::vector<std::pair<double, double>> blocks;
    for (double N = rep.N_window.lo; N < rep.N_window.hi; N *= 2.0) {
        const double n2 = std::min(2.0 * N, rep.N_window.hi);
        if (n2 > N) blocks.emplace_back(N, n2);
    }

    const double exponent = mode == TuranRhsMode::criterion
                                ? 10.0
                                : 1.0 / (2.0 * p.q) - 0.5;
    rep.rows.reserve(static_cast<std::size_t>(tau_grid) * blocks.size());
    for (uint32_t i = 0; i < tau_grid; ++i) {
        const double frac = tau_grid == 1 ? 0.5 : static_cast<double>(i) / (tau_grid - 1);
        const double tau = rep.tau_window.lo + frac * rep.tau_window.length();
        for (const auto& [n1, n2] : blocks) {
            TuranRow row;
            row.N = n1;
            row.N1 = n1;
            row.N2 = n2;
            row.tau = tau;
            row.lhs = std::abs(prime_sum(table, n1, n2, tau));
            row.rhs = rep.c * n1 * std::pow(std::log(n1), exponent) /
                      std::pow(tau, rep.tau_exponent);
            row.margin = row.rhs - row.lhs;
            rep.rows.push_back(row);
        }
    }
    if (!rep.rows.empty()) {
        uint64_t ok = 0;
        for (const auto& r : rep.rows) ok += r.margin >= -1e-12 ? 1 : 0;
        rep.pass_fraction = static_cast<double>(ok) / static_cast<double>(rep.rows.size());
    } else {
        rep.pass_fraction = 1.0; // no admissible block, nothing to violate
    }
    return rep;
}

CoveringResult covering_subdivision(const ParameterSet& p, const std::vector<double>& good_thetas) {
    CoveringResult res;
    const Rat B_nu = p.B * Rat(p.nu);
    res.cell_width = exp2_rat(B_nu - Rat(1));
    res.total_real = exp2_rat(B_nu + Rat(1)) + 6.0 * (std::sqrt(2.0) - 1.0);
    res.n_cells = static_cast<uint64_t>(std::ceil(res.total_real - 1e-12));
    res.origin = psi(p.J.lo);

    const double slack = 1e-9 * p.J.length();
    res.hit.assign(res.n_cells, 0);
    for (double theta : good_thetas) {
        if (theta < p.J.lo - slack || theta > p.J.hi + slack)
            throw std::invalid_argument("covering_subdivision: theta outside J");
        const double x = psi(std::clamp(theta, p.J.lo, p.J.hi));
        auto idx = static_cast<long long>(std::floor((x - res.origin) / res.cell_width));
        idx = std::clamp<long long>(idx, 0, static_cast<long long>(res.n_cells) - 1);
        res.hit[static_cast<std::size_t>(idx)] = 1;
    }
    for (uint8_t h : res.hit) res.hit_count += h;

    res.alpha_bar_threshold = p.alpha_bar * res.total_real;
    res.meets_alpha_bar = static_cast<double>(res.hit_count) >= res.alpha_bar_threshold;
    res.alpha_star_threshold = p.alpha_star * exp2_rat(B_nu + Rat(1));
    res.meets_alpha_star = static_cast<double>(res.hit_count) >= res.alpha_star_threshold;
    return res;
}

bool tau_window_in_shifted_L(const ParameterSet& p, double theta) {
    const double T = psi(theta);
    const double rootT = std::sqrt(T);
    return T - rootT >= theta + p.L.lo && T + rootT <= theta + p.L.hi;
}

bool range_nesting_upper_ok(const ParameterSet& p, double log_theta) {
    // T = psi(theta); for theta >= 1, log T is within [log theta, log theta + 3].
    const double log_T = log_theta + std::log1p(3.0 * std::exp(-0.5 * log_theta));
    const double lhs = p.D * (1.0 + p.delta0) * log_T;
    const double rhs = (1.0 + p.delta.to_double()) / p.two_B.to_double() * (log_T - std::log(7.0));
    return lhs <= rhs;
}

} // namespace zf
