#include "zerofree/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "zerofree/errors.hpp"
#include "zerofree/parallel.hpp"
#include "zerofree/quadrature.hpp"
#include "zerofree/rng.hpp"
#include "zerofree/spacing.hpp"

namespace zf {

namespace {

double factorial(uint32_t q) { return std::tgamma(static_cast<double>(q) + 1.0); }

// min(N^q, pi q!) without overflowing N^q.
double min_power_term(std::size_t N, uint32_t q) {
    const double pq = M_PI * factorial(q);
    if (N == 0) return 0.0;
    const double log_nq = static_cast<double>(q) * std::log(static_cast<double>(N));
    if (log_nq >= std::log(pq)) return pq;
    return std::min(std::exp(log_nq), pq);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

double int_pow(double x, uint32_t q) {
    double acc = 1.0;
    while (q) {
        if (q & 1u) acc *= x;
        x *= x;
        q >>= 1u;
    }
    return acc;
}

} // namespace

HilbertResult hilbert_form(const std::vector<double>& lambdas, const std::vector<cplx>& x,
                           const std::vector<cplx>& y) {
    const std::size_t N = lambdas.size();
    if (x.size() != N || y.size() != N)
        throw std::invalid_argument("hilbert_form: length mismatch");
    if (N < 2) throw std::invalid_argument("hilbert_form: need at least two points");

    std::vector<double> sorted = lambdas;
    std::sort(sorted.begin(), sorted.end());
    double delta = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < N; ++i) delta = std::min(delta, sorted[i + 1] - sorted[i]);
    if (delta <= 0.0) throw std::invalid_argument("hilbert_form: duplicate lambdas");

    cplx value(0.0, 0.0);
    for (std::size_t m = 0; m < N; ++m)
        for (std::size_t n = 0; n < N; ++n)
            if (n != m) value += x[m] * y[n] / (lambdas[m] - lambdas[n]);

    double nx = 0.0, ny = 0.0;
    for (const cplx& c : x) nx += std::norm(c);
    for (const cplx& c : y) ny += std::norm(c);

    HilbertResult r;
    r.value = value;
    r.min_gap = delta;
    r.bound = (M_PI / delta) * std::sqrt(nx) * std::sqrt(ny);
    r.pass = std::abs(value) <= r.bound * (1.0 + 1e-9);
    return r;
}

uint64_t oscillation_safe_panels(double interval_length, uint32_t q, double phi_max) {
    if (phi_max <= 0.0) return 1;
    const double max_width = M_PI / (4.0 * static_cast<double>(q) * phi_max);
    return std::max<uint64_t>(1, static_cast<uint64_t>(std::ceil(interval_length / max_width)));
}

XiValue xi_for_poly(const DirichletPoly& poly, uint32_t q, uint64_t budget) {
    try {
        return {xi_exact(poly.phases(), q, budget).value, false};
    } catch (const budget_exceeded&) {
        uint64_t pmax = 0;
        for (double phi : poly.phases()) {
            const double e = std::exp(phi);
            const uint64_t p = static_cast<uint64_t>(std::llround(e));
            if (p < 2 || std::abs(phi - std::log(static_cast<double>(p))) > 1e-9 ||
                !is_prime_u64(p))
                throw; // fallback is only sound for log-prime phases
            pmax = std::max(pmax, p);
        }
        return {std::exp(-static_cast<double>(q) * std::log(static_cast<double>(pmax))), true};
    }
}

namespace {

// Absolute roundoff floor for one evaluation of |...|^{2q}: each unimodular
// term carries ~(arg * eps) of phase error, the polynomial sums coefficient
// mass S1, and the power rule multiplies by 2q (2 S1)^{2q-1}.
double eval_roundoff(const DirichletPoly& poly, uint32_t q, double max_arg) {
    double s1 = 0.0;
    for (const cplx& c : poly.coeffs()) s1 += std::abs(c);
    const double per_eval = s1 * (1.0 + max_arg) * std::numeric_limits<double>::epsilon();
    return 4.0 * q * int_pow(2.0 * s1, 2 * q - 1) * per_eval;
}

MomentEstimate run_moment(const DirichletPoly& poly, Interval J, uint32_t q, uint64_t resolution,
                          const MomentOptions& opts, const std::function<double(double)>& integrand,
                          double bound_coeff_times, double shift_mag) {
    const uint64_t safe = oscillation_safe_panels(J.length(), q, poly.phi_max());
    if (resolution < safe)
        throw std::invalid_argument("moment: resolution below oscillation-safe minimum (" +
                                    std::to_string(safe) + " panels)");

    const int workers = opts.workers > 0 ? opts.workers : default_workers();
    const double full =
        composite_gauss(integrand, J.lo, J.hi, resolution, opts.quad_order, workers);
    const double half = composite_gauss(integrand, J.lo, J.hi, std::max<uint64_t>(1, resolution / 2),
                                        opts.quad_order, workers);
    const double len = J.length();

    MomentEstimate est;
    est.panels = resolution;
    est.value = full / len;
    // Richardson truncation estimate plus the documented roundoff floor
    const double max_arg =
        (std::max(std::abs(J.lo), std::abs(J.hi)) + shift_mag) * poly.phi_max();
    est.quad_error = std::abs(full - half) / len + eval_roundoff(poly, q, max_arg);

    const XiValue xi = xi_for_poly(poly, q, opts.eq_budget);
    est.xi = xi.value;
    est.xi_lower_bound = xi.lower_bound;
    const double mixed = std::isinf(xi.value)
                             ? 0.0
                             : 2.0 * min_power_term(poly.size(), q) / (len * xi.value);
    est.bound = (factorial(q) + mixed) * bound_coeff_times;
    est.margin = est.bound - est.value;
    return est;
}

} // namespace

MomentEstimate moment_increment(const DirichletPoly& poly, Interval J, uint32_t q, double s,
                                double t, uint64_t resolution, const MomentOptions& opts) {
    auto integrand = [&poly, s, t, q](double theta) {
        const cplx diff = poly.eval(theta + t) - poly.eval(theta + s);
        return int_pow(std::norm(diff), q);
    };
    // The moment is controlled by the l2 norm of c_n (e^{i t phi_n} - e^{i s phi_n}),
    // whose square is 4 sum |c_n|^2 sin^2((t-s) phi_n / 2) = 2 d(s,t)^2.
    const double d = poly.metric_d(s, t);
    return run_moment(poly, J, q, resolution, opts, integrand, int_pow(2.0 * d * d, q),
                      std::max(std::abs(s), std::abs(t)));
}

MomentEstimate moment_plain(const DirichletPoly& poly, Interval J, uint32_t q, uint64_t resolution,
                            const MomentOptions& opts) {
    auto integrand = [&poly, q](double theta) { return int_pow(std::norm(poly.eval(theta)), q); };
    return run_moment(poly, J, q, resolution, opts, integrand, int_pow(poly.coeff_norm_sq(), q),
                      0.0);
}

MomentEstimate cor22_check(const PrimeTable& table, const std::vector<cplx>& coeffs, double Nmax,
                           double T, uint32_t q, uint64_t resolution, const MomentOptions& opts) {
    if (!(T > 0.0)) throw std::invalid_argument("cor22_check: T must be positive");
    std::vector<double> phases = table.log_phases(2.0, Nmax);
    if (phases.size() != coeffs.size())
        throw std::invalid_argument("cor22_check: need one coefficient per prime <= Nmax");
    DirichletPoly poly(std::move(phases), coeffs);

    const Interval J{-T, T};
    const uint64_t safe = oscillation_safe_panels(J.length(), q, poly.phi_max());
    if (resolution < safe)
        throw std::invalid_argument("cor22_check: resolution below oscillation-safe minimum (" +
                                    std::to_string(safe) + " panels)");

    auto integrand = [&poly, q](double theta) { return int_pow(std::norm(poly.eval(theta)), q); };
    const int workers = opts.workers > 0 ? opts.workers : default_workers();
    const double full = composite_gauss(integrand, J.lo, J.hi, resolution, opts.quad_order, workers);
    const double half = composite_gauss(integrand, J.lo, J.hi, std::max<uint64_t>(1, resolution / 2),
                                        opts.quad_order, workers);

    MomentEstimate est;
    est.panels = resolution;
    est.value = full / (2.0 * T);
    est.quad_error =
        std::abs(full - half) / (2.0 * T) + eval_roundoff(poly, q, T * poly.phi_max());
    est.xi = 0.0; // bound uses the Nmax^q form directly
    est.xi_lower_bound = true;
    const double log_nq = static_cast<double>(q) * std::log(Nmax);
    est.bound = factorial(q) * (1.0 + 2.0 * M_PI * std::exp(log_nq) / T) *
                int_pow(poly.coeff_norm_sq(), q);
    est.margin = est.bound - est.value;
    return est;
}

double moment_factor(const DirichletPoly& poly, Interval J, uint32_t q, uint64_t eq_budget) {
    const XiValue xi = xi_for_poly(poly, q, eq_budget);
    const double mixed = std::isinf(xi.value) ? 0.0 : 2.0 * M_PI / (J.length() * xi.value);
    return std::pow(factorial(q) * (1.0 + mixed), 1.0 / (2.0 * static_cast<double>(q)));
}

double thm23_bound(const DirichletPoly& poly, Interval J, Interval L, uint32_t q, double cq,
                   uint64_t eq_budget) {
    if (!(cq > 0.0)) throw std::invalid_argument("thm23_bound: Cq must be positive");
    const double factor = moment_factor(poly, J, q, eq_budget);
    const double phi = poly.phi_max();
    const double len = L.length();
    const double max_part =
        std::pow(std::max(1.0, len * phi), 1.0 / (2.0 * static_cast<double>(q)));
    const double min_part = phi > 0.0 ? std::min(len, 1.0 / phi) : len;
    return cq * factor * max_part *
           (std::sqrt(poly.coeff_norm_sq()) + min_part * std::sqrt(poly.weighted_norm_sq()));
}

double empirical_sup_norm(const DirichletPoly& poly, Interval J, Interval L, uint32_t q,
                          uint32_t theta_samples, uint64_t seed, double sup_eps, int workers) {
    if (theta_samples == 0)
        throw std::invalid_argument("empirical_sup_norm: need at least one sample");
    std::vector<double> powers(theta_samples);
    const int nworkers = workers > 0 ? workers : default_workers();
    parallel_for(theta_samples, nworkers, [&](std::size_t i) {
        Rng rng(seed, i);
        const double theta = rng.uniform(J.lo, J.hi);
        SupOptions sopts;
        sopts.workers = 1;
        const SupCertificate cert =
            certified_sup(poly, Interval{theta + L.lo, theta + L.hi}, sup_eps, sopts);
        powers[i] = int_pow(cert.upper * cert.upper, q);
    });
    const double mean = pairwise_sum(powers) / static_cast<double>(theta_samples);
    return std::pow(mean, 1.0 / (2.0 * static_cast<double>(q)));
}

DirichletPoly calibration_poly(const PrimeTable& table, uint32_t index, uint64_t seed) {
    Rng rng(seed ^ 0x5ca1ab1eULL, index);
    const uint32_t N = 2 + static_cast<uint32_t>(rng.below(4)); // 2..5 prime phases
    std::vector<double> phases;
    std::vector<cplx> coeffs;
    for (uint32_t n = 1; n <= N; ++n) {
        phases.push_back(std::log(static_cast<double>(table.nth_prime(n))));
        const double mag = 0.2 + 0.8 * rng.uniform01();
        const double arg = 2.0 * M_PI * rng.uniform01();
        coeffs.emplace_back(mag * std::cos(arg), mag * std::sin(arg));
    }
    return DirichletPoly(std::move(phases), std::move(coeffs));
}

ChainCalibration calibrate_cq(const PrimeTable& table, uint32_t q, uint32_t trials, uint64_t seed,
                              int workers) {
    if (trials == 0) throw std::invalid_argument("calibrate_cq: need at least one trial");
    ChainCalibration cal;
    cal.q = q;
    cal.trials = trials;
    cal.seed = seed;

    const Interval J{0.0, 50.0};
    const Interval L{0.0, 2.0};
    std::vector<double> ratios(trials);
    for (uint32_t i = 0; i < trials; ++i) {
        const DirichletPoly poly = calibration_poly(table, i, seed);
        const double emp =
            empirical_sup_norm(poly, J, L, q, 64, seed + 17 * (i + 1), 1e-3, workers);
        const double base = thm23_bound(poly, J, L, q, 1.0);
        ratios[i] = emp / base;
    }
    auto it = std::max_element(ratios.begin(), ratios.end());
    cal.worst_index = static_cast<uint32_t>(it - ratios.begin());
    cal.worst_ratio = *it;
    cal.cq = *it;
    return cal;
}

} // namespace zf
