#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace zf {

// Gauss-Legendre nodes/weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes via Newton iteration on P_m; accurate to ~1e-15 for m <= 64.
const GaussRule& gauss_rule(int order);

// Composite Gauss-Legendre over [a, b] with `panels` equal panels.
// Panels are evaluated in parallel into slots and combined with a pairwise
// tree sum, so the result does not depend on the worker count.
double composite_gauss(const std::function<double(double)>& f, double a, double b,
                       uint64_t panels, int order = 8, int workers = 0);

} // namespace zf
