#include "zerofree/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "zerofree/errors.hpp"
#include "zerofree/parallel.hpp"

namespace zf {

namespace {

// B_{2k}/(2k)! for k = 1..15.
constexpr double kBernoulliOverFact[16] = {
    0.0, // unused
    8.3333333333333333333e-02,  -1.3888888888888888889e-03, 3.3068783068783068783e-05,
    -8.2671957671957671958e-07, 2.0876756987868098979e-08,  -5.2841901386874931848e-10,
    1.3382536530684678833e-11,  -3.3896802963225828668e-13, 8.5860620562778445641e-15,
    -2.1748686985580618730e-16, 5.5090028283602295152e-18,  -1.3954464685812523340e-19,
    3.5347070396294674716e-21,  -8.9535174270375468504e-23, 2.2679524523376830603e-24,
};

double em_tail_estimate(cplx s, double M, uint32_t K) {
    // |B_{2K+2}/(2K+2)! * s(s+1)...(s+2K) * M^{-s-2K-1}| * |s+2K+1|/(sigma+2K+1)
    double log_poch = 0.0;
    for (uint32_t j = 0; j <= 2 * K; ++j) log_poch += 0.5 * std::log(std::norm(s + double(j)));
    const double log_term = std::log(std::abs(kBernoulliOverFact[K + 1])) + log_poch -
                            (s.real() + 2.0 * K + 1.0) * std::log(M);
    const double ratio = std::abs(s + double(2 * K + 1)) / (s.real() + 2.0 * K + 1.0);
    return std::exp(log_term) * ratio;
}

} // namespace

ZetaSample zeta_em(cplx s, uint32_t terms, uint32_t bernoulli_order) {
    if (s == cplx(1.0, 0.0)) throw std::invalid_argument("zeta_em: pole at s = 1");
    if (terms < 2) throw std::invalid_argument("zeta_em: need at least 2 terms");
    if (bernoulli_order < 1 || bernoulli_order > 14)
        throw std::invalid_argument("zeta_em: bernoulli_order must be in [1, 14]");
    if (s.real() + 2.0 * bernoulli_order + 1.0 <= 0.0)
        throw std::invalid_argument("zeta_em: sigma too negative for the remainder bound");

    const double M = static_cast<double>(terms);
    const uint32_t K = bernoulli_order;

    cplx sum(0.0, 0.0);
    for (uint32_t n = 1; n < terms; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    const double logM = std::log(M);
    sum += std::exp((1.0 - s) * logM) / (s - 1.0);
    sum += 0.5 * std::exp(-s * logM);

    cplx poch = s;                           // s (s+1) ... running product
    cplx mpow = std::exp((-s - 1.0) * logM); // M^{-s-1}
    const double m2 = 1.0 / (M * M);
    for (uint32_t k = 1; k <= K; ++k) {
        sum += kBernoulliOverFact[k] * poch * mpow;
        poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
        mpow *= m2;
    }

    ZetaSample out;
    out.s = s;
    out.value = sum;
    out.err = std::abs(kBernoulliOverFact[K + 1]) * std::abs(poch) * std::abs(mpow) *
              std::abs(s + double(2 * K + 1)) / (s.real() + 2.0 * K + 1.0);
    return out;
}

ZetaSample zeta_auto(cplx s, double tol, uint32_t max_terms) {
    const uint32_t K = 12;
    uint32_t terms = std::max<uint32_t>(16, static_cast<uint32_t>(std::abs(s.imag()) / 4.0));
    while (terms < max_terms && em_tail_estimate(s, static_cast<double>(terms), K) > 0.5 * tol)
        terms *= 2;
    ZetaSample sample = zeta_em(s, std::min(terms, max_terms), K);
    if (sample.err > tol)
        throw accuracy_unreachable("zeta_auto: tolerance unreachable within term budget",
                                   sample.err);
    return sample;
}

double rs_theta(double t) {
    const double u = t / (2.0 * M_PI);
    return 0.5 * t * std::log(u) - 0.5 * t - M_PI / 8.0 + 1.0 / (48.0 * t) +
           7.0 / (5760.0 * t * t * t) + 31.0 / (80640.0 * std::pow(t, 5.0));
}

double hardy_Z(double t, double* im_residue) {
    if (t < 2.0) throw std::invalid_argument("hardy_Z: valid for t >= 2");
    const ZetaSample z = zeta_auto(cplx(0.5, t), 1e-10);
    const double th = rs_theta(t);
    const cplx rotated = cplx(std::cos(th), std::sin(th)) * z.value;
    if (im_residue) *im_residue = rotated.imag();
    return rotated.real();
}

namespace {

double rs_c0(double p) {
    const double denom = std::cos(2.0 * M_PI * p);
    if (std::abs(denom) < 1e-3) {
        // removable singularity at p = 1/4, 3/4; two-point average, O(h^2)
        const double h = 1e-3;
        return 0.5 * (rs_c0(p - h) + rs_c0(p + h));
    }
    return std::cos(2.0 * M_PI * (p * p - p - 1.0 / 16.0)) / denom;
}

} // namespace

double hardy_Z_rs(double t) {
    if (t < 2.0 * M_PI) throw std::invalid_argument("hardy_Z_rs: need t >= 2 pi");
    const double a = std::sqrt(t / (2.0 * M_PI));
    const auto N = static_cast<uint32_t>(std::floor(a));
    const double p = a - static_cast<double>(N);
    const double th = rs_theta(t);

    double main = 0.0;
    for (uint32_t n = 1; n <= N; ++n)
        main += std::cos(th - t * std::log(static_cast<double>(n))) /
                std::sqrt(static_cast<double>(n));
    main *= 2.0;

    const double corr = (N % 2 == 1 ? 1.0 : -1.0) * std::pow(2.0 * M_PI / t, 0.25) * rs_c0(p);
    return main + corr;
}

ZeroCount count_zeros(double T, double grid_step, const ZeroCountOptions& opts) {
    if (!(T > 2.0)) throw std::invalid_argument("count_zeros: need T > 2");
    if (T > opts.desk_cap) throw std::invalid_argument("count_zeros: T exceeds desk cap");
    if (!(grid_step > 0.0)) throw std::invalid_argument("count_zeros: need positive step");

    ZeroCount zc;
    zc.grid_step = grid_step;
    const double u = T / (2.0 * M_PI);
    zc.main_term = u * std::log(u) - u + 7.0 / 8.0;
    const double mean_gap = 2.0 * M_PI / std::log(u);
    zc.resolution_warning = grid_step > 0.5 * mean_gap;

    const auto n = static_cast<std::size_t>(std::floor((T - 2.0) / grid_step)) + 1;
    std::vector<double> z(n);
    const int workers = opts.workers > 0 ? opts.workers : default_workers();
    parallel_for(n, workers, [&](std::size_t i) {
        z[i] = hardy_Z(std::min(2.0 + static_cast<double>(i) * grid_step, T));
    });

    double prev = z[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (z[i] == 0.0) continue;
        if (prev != 0.0 && std::signbit(z[i]) != std::signbit(prev)) ++zc.count;
        prev = z[i];
    }
    zc.within_main_term = std::abs(static_cast<double>(zc.count) - zc.main_term) <= 1.0;
    return zc;
}

BoxScanReport box_zero_scan(double sigma0, Interval t_interval, uint32_t grid,
                            const BoxScanOptions& opts) {
    if (!(sigma0 > 0.4 && sigma0 < 1.0))
        throw std::invalid_argument("box_zero_scan: sigma0 must lie in (0.4, 1)");
    if (grid < 2) throw std::invalid_argument("box_zero_scan: need grid >= 2");

    BoxScanReport rep;
    rep.sigma_lo = sigma0;
    rep.sigma_hi = 1.2;
    rep.t_interval = t_interval;
    rep.grid = grid;
    rep.diagnostic = sigma0 <= 0.5;

    if (t_interval.empty()) {
        rep.consistent = true; // nothing to scan, nothing violated
        rep.min_abs = std::numeric_limits<double>::infinity();
        return rep;
    }
    if (std::abs(t_interval.lo) > opts.desk_cap || std::abs(t_interval.hi) > opts.desk_cap) {
        rep.analysis_only = true;
        return rep;
    }

    // t axis gets at least 8 samples per unit so zero dips are resolved.
    const uint32_t n_sigma = grid;
    const uint32_t n_t = std::clamp<uint32_t>(
        static_cast<uint32_t>(std::ceil(8.0 * t_interval.length())), grid, 4096);
    const double ds = (rep.sigma_hi - rep.sigma_lo) / (n_sigma - 1);
    const double dt = n_t > 1 ? t_interval.length() / (n_t - 1) : 0.0;
    const std::size_t n = static_cast<std::size_t>(n_sigma) * n_t;
    std::vector<ZetaSample> cell(n);
    const int workers = opts.workers > 0 ? opts.workers : default_workers();
    parallel_for(n, workers, [&](std::size_t idx) {
        const uint32_t i = static_cast<uint32_t>(idx / n_t);
        const uint32_t j = static_cast<uint32_t>(idx % n_t);
        const cplx s(rep.sigma_lo + ds * i, t_interval.lo + dt * j);
        cell[idx] = zeta_auto(s, 1e-9);
    });

    rep.min_abs = std::numeric_limits<double>::infinity();
    std::size_t argmin = 0;
    for (std::size_t idx = 0; idx < n; ++idx) {
        rep.max_err = std::max(rep.max_err, cell[idx].err);
        const double a = std::abs(cell[idx].value);
        if (a < rep.min_abs) {
            rep.min_abs = a;
            rep.argmin_s = cell[idx].s;
            argmin = idx;
        }
    }

    // Resolution floor from the gradient around the minimum: a zero hiding
    // between samples would make the dip slope visible in the neighbors.
    const uint32_t ai = static_cast<uint32_t>(argmin / n_t);
    const uint32_t aj = static_cast<uint32_t>(argmin % n_t);
    double grad = 0.0;
    auto value_at = [&](uint32_t i, uint32_t j) { return std::abs(cell[std::size_t(i) * n_t + j].value); };
    if (ai > 0) grad = std::max(grad, std::abs(value_at(ai - 1, aj) - rep.min_abs) / ds);
    if (ai + 1 < n_sigma) grad = std::max(grad, std::abs(value_at(ai + 1, aj) - rep.min_abs) / ds);
    if (dt > 0.0 && aj > 0)
        grad = std::max(grad, std::abs(value_at(ai, aj - 1) - rep.min_abs) / dt);
    if (dt > 0.0 && aj + 1 < n_t)
        grad = std::max(grad, std::abs(value_at(ai, aj + 1) - rep.min_abs) / dt);
    rep.floor = 2.0 * rep.max_err + 0.75 * grad * std::max(ds, dt);
    rep.consistent = rep.min_abs > rep.floor;

    // Critical-line zeros inside the window do not touch the claim; report them.
    if (t_interval.lo >= 2.0 && t_interval.length() > 0.0) {
        const double step = std::min(0.02, std::max(1e-4, t_interval.length() / (8.0 * grid)));
        const auto m = static_cast<std::size_t>(std::floor(t_interval.length() / step)) + 1;
        std::vector<double> z(m);
        parallel_for(m, workers, [&](std::size_t i) {
            z[i] = hardy_Z(std::min(t_interval.lo + static_cast<double>(i) * step, t_interval.hi));
        });
        for (std::size_t i = 1; i < m; ++i)
            if (std::signbit(z[i]) != std::signbit(z[i - 1])) ++rep.critical_line_zeros;
    }

    if (opts.keep_samples) rep.samples = std::move(cell);
    return rep;
}

} // namespace zf
