#include "zerofree/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "zerofree/parallel.hpp"

namespace zf {

namespace {

GaussRule make_rule(int m) {
    GaussRule r;
    r.nodes.resize(m);
    r.weights.resize(m);
    for (int i = 0; i < m; ++i) {
        // Chebyshev-angle initial guess, then Newton on P_m.
        double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < m; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = m * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

} // namespace

const GaussRule& gauss_rule(int order) {
    if (order < 2 || order > 64) throw std::invalid_argument("gauss_rule: order out of range");
    static std::map<int, GaussRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make_rule(order)).first;
    return it->second;
}

double composite_gauss(const std::function<double(double)>& f, double a, double b,
                       uint64_t panels, int order, int workers) {
    if (panels == 0) throw std::invalid_argument("composite_gauss: need at least one panel");
    const GaussRule& rule = gauss_rule(order);
    const double w = (b - a) / static_cast<double>(panels);

    std::vector<double> slot(panels);
    const int nworkers = workers > 0 ? workers : default_workers();
    parallel_for(panels, nworkers, [&](std::size_t k) {
        const double lo = a + static_cast<double>(k) * w;
        const double mid = lo + 0.5 * w;
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * f(mid + 0.5 * w * rule.nodes[i]);
        slot[k] = 0.5 * w * acc;
    });
    return pairwise_sum(slot);
}

} // namespace zf
