#include "zerofree/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zerofree/errors.hpp"
#include "zerofree/parallel.hpp"

namespace zf {

DirichletPoly::DirichletPoly(std::vector<double> phases, std::vector<cplx> coeffs)
    : phases_(std::move(phases)), coeffs_(std::move(coeffs)), phi_max_(0.0) {
    if (phases_.size() != coeffs_.size())
        throw std::invalid_argument("DirichletPoly: phases/coeffs length mismatch");
    std::vector<double> sorted = phases_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("DirichletPoly: phases must be pairwise distinct");
    for (double p : phases_) phi_max_ = std::max(phi_max_, std::abs(p));
}

DirichletPoly DirichletPoly::prime_poly(const PrimeTable& table, double n1, double n2) {
    std::vector<double> phases = table.log_phases(n1, n2);
    std::vector<cplx> coeffs(phases.size(), cplx(1.0, 0.0));
    return DirichletPoly(std::move(phases), std::move(coeffs));
}

double DirichletPoly::coeff_norm_sq() const {
    double s = 0.0;
    for (const cplx& c : coeffs_) s += std::norm(c);
    return s;
}

double DirichletPoly::weighted_norm_sq() const {
    double s = 0.0;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) s += std::norm(coeffs_[n]) * phases_[n] * phases_[n];
    return s;
}

cplx DirichletPoly::eval(double t) const {
    // The phase t*phi is formed as an exact two-product; the rounding
    // residual (up to ~0.06 rad when |t phi| nears 1e15) is applied as a
    // rotation correction, keeping the error near 1 ulp per term.
    cplx acc(0.0, 0.0);
    for (std::size_t n = 0; n < phases_.size(); ++n) {
        const double hi = t * phases_[n];
        const double lo = std::fma(t, phases_[n], -hi);
        const double sh = std::sin(hi), ch = std::cos(hi);
        const double sl = std::sin(lo), cl = std::cos(lo);
        acc += coeffs_[n] * cplx(ch * cl - sh * sl, sh * cl + ch * sl);
    }
    return acc;
}

double DirichletPoly::metric_d(double s, double t) const {
    double acc = 0.0;
    for (std::size_t n = 0; n < phases_.size(); ++n) {
        const double sn = std::sin(0.5 * (t - s) * phases_[n]);
        acc += std::norm(coeffs_[n]) * sn * sn;
    }
    return std::sqrt(2.0 * acc);
}

double DirichletPoly::derivative_bound() const {
    double s = 0.0;
    for (std::size_t n = 0; n < phases_.size(); ++n) s += std::abs(coeffs_[n]) * std::abs(phases_[n]);
    return s;
}

cplx prime_sum(const PrimeTable& table, double n1, double n2, double tau) {
    cplx acc(0.0, 0.0);
    for (uint64_t p : table.primes_in(n1, n2)) {
        const double a = -tau * std::log(static_cast<double>(p));
        acc += cplx(std::cos(a), std::sin(a));
    }
    return acc;
}

SupCertificate certified_sup(const DirichletPoly& poly, Interval L, double eps,
                             const SupOptions& opts) {
    if (L.empty()) throw std::invalid_argument("certified_sup: empty interval");
    if (!(eps > 0.0)) throw std::invalid_argument("certified_sup: eps must be positive");

    SupCertificate cert;
    cert.interval = L;
    cert.lipschitz = poly.derivative_bound();

    const double len = L.length();
    if (cert.lipschitz == 0.0 || len == 0.0) {
        cert.lower = cert.upper = std::abs(poly.eval(0.5 * (L.lo + L.hi)));
        cert.argmax_t = 0.5 * (L.lo + L.hi);
        cert.points = 1;
        return cert;
    }

    // Uniform grid including both endpoints; coverage radius is h/2, so the
    // gap lipschitz*h/2 stays at or below eps for the requested step.
    const double step = eps / cert.lipschitz;
    uint64_t n = static_cast<uint64_t>(std::ceil(len / step)) + 1;
    if (n > opts.max_points) {
        n = opts.max_points;
        cert.budget_exceeded = true;
    }
    if (n < 2) n = 2;
    const double h = len / static_cast<double>(n - 1);

    std::vector<double> vals(n);
    const int workers = opts.workers > 0 ? opts.workers : default_workers();
    parallel_for(n, workers, [&](std::size_t k) {
        const double t = (k + 1 == n) ? L.hi : L.lo + static_cast<double>(k) * h;
        vals[k] = std::abs(poly.eval(t));
    });

    std::size_t best = 0;
    for (std::size_t k = 1; k < n; ++k)
        if (vals[k] > vals[best]) best = k;

    cert.grid_step = h;
    cert.points = n;
    cert.lower = vals[best];
    cert.upper = cert.lower + 0.5 * cert.lipschitz * h;
    cert.argmax_t = (best + 1 == n) ? L.hi : L.lo + static_cast<double>(best) * h;
    return cert;
}

namespace {

struct GridPointBest {
    double value = -1.0;
    uint32_t first = 0; // 1-based prime indices of the best block
    uint32_t last = 0;
};

// O(K^2) scan over admissible blocks at one t.
// TODO: replace the pair scan with a convex-hull/farthest-point structure if
// family scans ever need K beyond ~1e4.
GridPointBest scan_blocks(const std::vector<uint64_t>& ps, double omega) {
    const std::size_t K = ps.size();
    GridPointBest best;
    best.value = 0.0;
    if (K == 0) return best;

    std::vector<cplx> prefix(K + 1, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < K; ++k) {
        const double a = -omega * std::log(static_cast<double>(ps[k]));
        prefix[k + 1] = prefix[k] + cplx(std::cos(a), std::sin(a));
    }

    std::size_t bmax = 1;
    for (std::size_t a = 1; a <= K; ++a) {
        if (bmax < a) bmax = a;
        while (bmax < K && ps[bmax] <= 2 * ps[a - 1]) ++bmax; // ps is 0-based
        for (std::size_t b = a; b <= bmax; ++b) {
            const double v = std::abs(prefix[b] - prefix[a - 1]);
            if (v > best.value) {
                best.value = v;
                best.first = static_cast<uint32_t>(a);
                best.last = static_cast<uint32_t>(b);
            }
        }
    }
    return best;
}

} // namespace

FamilySup family_sup(const PrimeTable& table, double theta, double U, double delta, Interval L,
                     const FamilySupOptions& opts) {
    if (L.empty()) throw std::invalid_argument("family_sup: empty interval");
    const double hi_range = std::pow(U, 1.0 + delta);
    if (hi_range > static_cast<double>(table.limit()))
        throw range_exceeds_table("family_sup: U^{1+delta} exceeds table limit");

    auto span = table.primes_in(U, hi_range);
    std::vector<uint64_t> ps(span.begin(), span.end());

    FamilySup out;
    out.prime_count = ps.size();
    out.lipschitz = static_cast<double>(ps.size()) * std::log(std::max(2.0, hi_range));
    if (ps.empty()) {
        out.argmax_t = L.lo;
        out.points = 0;
        out.grid_step = 0.0;
        return out;
    }

    // Power-of-two step anchored at 0 (see header note on monotonicity).
    double h = opts.eps / out.lipschitz;
    h = std::exp2(std::floor(std::log2(h)));
    auto count_points = [&](double step) -> long long {
        const long long k0 = static_cast<long long>(std::ceil(L.lo / step - 1e-12));
        const long long k1 = static_cast<long long>(std::floor(L.hi / step + 1e-12));
        return k1 - k0 + 1;
    };
    for (int guard = 0; guard < 80 && count_points(h) < 1; ++guard) h *= 0.5;
    while (count_points(h) > static_cast<long long>(opts.max_points)) {
        h *= 2.0;
        out.budget_exceeded = true;
    }
    const long long k0 = static_cast<long long>(std::ceil(L.lo / h - 1e-12));
    const long long k1 = static_cast<long long>(std::floor(L.hi / h + 1e-12));
    const std::size_t n = static_cast<std::size_t>(std::max<long long>(0, k1 - k0 + 1));
    if (n == 0) {
        // Degenerate interval shorter than any representable step.
        GridPointBest b = scan_blocks(ps, theta + 0.5 * (L.lo + L.hi));
        out.lower = b.value;
        out.upper = b.value;
        out.argmax_t = 0.5 * (L.lo + L.hi);
        out.argmax_p_first = ps[b.first - 1];
        out.argmax_p_last = ps[b.last - 1];
        out.points = 1;
        out.grid_step = 0.0;
        return out;
    }

    std::vector<GridPointBest> slots(n);
    const int workers = opts.workers > 0 ? opts.workers : default_workers();
    parallel_for(n, workers, [&](std::size_t j) {
        const double t = static_cast<double>(k0 + static_cast<long long>(j)) * h;
        slots[j] = scan_blocks(ps, theta + t);
    });

    std::size_t best = 0;
    for (std::size_t j = 1; j < n; ++j)
        if (slots[j].value > slots[best].value) best = j;

    const double t_first = static_cast<double>(k0) * h;
    const double t_last = static_cast<double>(k1) * h;
    const double cover = std::max({0.5 * h, t_first - L.lo, L.hi - t_last});

    out.lower = slots[best].value;
    out.upper = out.lower + out.lipschitz * std::max(cover, 0.0);
    out.argmax_t = static_cast<double>(k0 + static_cast<long long>(best)) * h;
    out.argmax_p_first = slots[best].first ? ps[slots[best].first - 1] : 0;
    out.argmax_p_last = slots[best].last ? ps[slots[best].last - 1] : 0;
    out.grid_step = h;
    out.points = n;
    return out;
}

} // namespace zf
