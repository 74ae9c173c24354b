#pragma once

namespace zf {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool empty() const { return hi < lo; }
};

} // namespace zf
