#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zf {

// Exact rational over 64-bit integers with 128-bit intermediates.
// Denominator is kept positive, fractions are always reduced. All
// arithmetic throws std::overflow_error instead of wrapping; the
// parameter pipeline works with tiny numerators so an overflow means
// a logic bug, not a scale problem.
class Rat {
public:
    constexpr Rat() : num_(0), den_(1) {}
    constexpr Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("Rat: zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rat: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // Integer power, exponent >= 0.
    Rat pow(unsigned e) const {
        Rat acc(1), base = *this;
        while (e) {
            if (e & 1u) acc *= base;
            base *= base;
            e >>= 1u;
        }
        return acc;
    }

private:
    using i128 = __int128;

    static Rat make(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr i128 lo = std::numeric_limits<long long>::min();
        constexpr i128 hi = std::numeric_limits<long long>::max();
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("Rat: 64-bit overflow after reduction");
        Rat r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_;
    long long den_;
};

} // namespace zf
