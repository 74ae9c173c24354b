#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "zerofree/errors.hpp"
#include "zerofree/inequalities.hpp"
#include "zerofree/primes.hpp"
#include "zerofree/quadrature.hpp"
#include "zerofree/rng.hpp"
#include "zerofree/spacing.hpp"

using namespace zf;

namespace {

// Random delta-separated instance mirroring the randomized suite.
void random_hilbert_instance(Rng& rng, size_t n, double min_gap, std::vector<double>& lambdas,
                             std::vector<cplx>& x, std::vector<cplx>& y) {
    lambdas.clear();
    x.clear();
    y.clear();
    double cur = rng.uniform(-5, 5);
    for (size_t i = 0; i < n; ++i) {
        lambdas.push_back(cur);
        cur += min_gap + rng.uniform(0, 2);
        x.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
        y.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
    }
}

DirichletPoly prime_phase_poly(const PrimeTable& table, uint32_t N, Rng& rng) {
    std::vector<double> phases;
    std::vector<cplx> coeffs;
    for (uint32_t n = 1; n <= N; ++n) {
        phases.push_back(std::log(double(table.nth_prime(n))));
        coeffs.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
    }
    return DirichletPoly(std::move(phases), std::move(coeffs));
}

} // namespace

TEST_CASE("hilbert_form hand cases") {
    auto r = hilbert_form({0.0, 1.0}, {cplx(1, 0), cplx(1, 0)}, {cplx(1, 0), cplx(1, 0)});
    CHECK(std::abs(r.value) < 1e-15);
    CHECK(r.pass);

    const double delta = 1e-2;
    auto r2 = hilbert_form({0.0, delta}, {cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(1, 0)});
    CHECK(std::abs(r2.value) == doctest::Approx(1.0 / delta).epsilon(1e-12));
    CHECK(r2.bound == doctest::Approx(M_PI / delta).epsilon(1e-12));
    CHECK(r2.pass);
}

TEST_CASE("hilbert_form validation") {
    CHECK_THROWS_AS(hilbert_form({1.0, 1.0}, {cplx(1, 0), cplx(1, 0)}, {cplx(1, 0), cplx(1, 0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(hilbert_form({1.0, 2.0}, {cplx(1, 0)}, {cplx(1, 0), cplx(1, 0)}),
                    std::invalid_argument);
}

TEST_CASE("hilbert_form holds on 1000 random instances") {
    Rng rng(101);
    for (int i = 0; i < 1000; ++i) {
        const size_t n = 2 + rng.below(49);
        std::vector<double> lambdas;
        std::vector<cplx> x, y;
        random_hilbert_instance(rng, n, 1e-3, lambdas, x, y);
        auto r = hilbert_form(lambdas, x, y);
        CHECK(r.pass);
        CHECK(r.min_gap >= 1e-3 - 1e-15);
    }
}

TEST_CASE("hilbert_form over E_q-indexed spacing points") {
    // lambda_k = <k, phi> for k in E_q with delta = xi: the multi-index form
    // of the inequality reduces to the flat one through any enumeration.
    std::vector<double> phases{std::log(2.0), std::log(3.0), std::log(5.0)};
    const uint32_t q = 2;
    auto eq = enumerate_Eq(3, q);
    auto xi = xi_exact(phases, q);

    std::vector<double> lambdas;
    for (auto& k : eq) {
        double dot = 0;
        for (size_t n = 0; n < phases.size(); ++n) dot += double(k[n]) * phases[n];
        lambdas.push_back(dot);
    }
    Rng rng(7);
    std::vector<cplx> x, y;
    for (size_t i = 0; i < lambdas.size(); ++i) {
        x.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
        y.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
    }
    auto r = hilbert_form(lambdas, x, y);
    CHECK(r.min_gap == doctest::Approx(xi.value).epsilon(1e-12));
    CHECK(r.pass);
}

TEST_CASE("moment_increment single term is tight") {
    DirichletPoly poly({std::log(2.0)}, {cplx(1, 0)});
    const Interval J{0.0, 10.0};
    const double s = 0.3, t = 1.7;
    const uint64_t panels = oscillation_safe_panels(J.length(), 1, poly.phi_max());
    auto est = moment_increment(poly, J, 1, s, t, panels);

    const double x = 0.5 * (t - s) * std::log(2.0);
    const double expect = 4.0 * std::sin(x) * std::sin(x); // constant integrand
    CHECK(est.value == doctest::Approx(expect).epsilon(1e-10));
    CHECK(est.bound == doctest::Approx(expect).epsilon(1e-10));
    CHECK(est.margin >= -est.quad_error - 1e-12);
}

TEST_CASE("moment_increment with s = t vanishes") {
    DirichletPoly poly({std::log(2.0), std::log(3.0)}, {cplx(1, 0), cplx(0, 1)});
    auto est = moment_increment(poly, {0.0, 5.0}, 2, 1.0, 1.0, 200);
    CHECK(est.value == 0.0);
    CHECK(est.bound == 0.0);
}

TEST_CASE("moment_increment 3-term prime poly vs 10x resolution oracle") {
    auto table = PrimeTable::sieve(10);
    Rng rng(33);
    auto poly = prime_phase_poly(table, 3, rng);
    const Interval J{0.0, 100.0};
    const uint32_t q = 2;
    const double s = 0.2, t = 2.9;
    const uint64_t panels = oscillation_safe_panels(J.length(), q, poly.phi_max());
    auto est = moment_increment(poly, J, q, s, t, panels);
    CHECK(est.value <= est.bound + est.quad_error);

    auto fine = moment_increment(poly, J, q, s, t, panels * 10);
    CHECK(std::abs(fine.value - est.value) <= est.quad_error + 1e-12);
    CHECK(fine.value <= fine.bound + fine.quad_error);
}

TEST_CASE("moment_plain basics") {
    DirichletPoly one({std::log(2.0)}, {cplx(1, 0)});
    for (uint32_t q : {1u, 2u, 3u}) {
        auto est = moment_plain(one, {0.0, 20.0}, q, 400);
        CHECK(est.value == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(est.bound >= std::tgamma(q + 1.0) - 1e-12);
    }

    DirichletPoly zero({std::log(2.0), std::log(3.0)}, {cplx(0, 0), cplx(0, 0)});
    auto est0 = moment_plain(zero, {0.0, 5.0}, 2, 100);
    CHECK(est0.value == 0.0);
    CHECK(est0.bound == 0.0);
}

TEST_CASE("moment_plain prime poly N=4 q=2") {
    auto table = PrimeTable::sieve(10);
    Rng rng(44);
    auto poly = prime_phase_poly(table, 4, rng);
    const Interval J{0.0, 50.0};
    const uint64_t panels = oscillation_safe_panels(J.length(), 2, poly.phi_max());
    auto est = moment_plain(poly, J, 2, panels);
    CHECK(est.value <= est.bound + est.quad_error);
    CHECK(est.value >= 0.0);
}

TEST_CASE("moment resolution validation") {
    auto table = PrimeTable::sieve(10);
    Rng rng(55);
    auto poly = prime_phase_poly(table, 3, rng);
    const Interval J{0.0, 100.0};
    const uint64_t safe = oscillation_safe_panels(J.length(), 2, poly.phi_max());
    CHECK_THROWS_AS(moment_plain(poly, J, 2, safe - 1), std::invalid_argument);
}

TEST_CASE("cor22 single prime") {
    auto table = PrimeTable::sieve(10);
    const double T = 10.0;
    auto est = cor22_check(table, {cplx(1, 0)}, 2.5, T, 1, 200);
    CHECK(est.value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(est.bound == doctest::Approx(1.0 + 2.0 * M_PI * 2.5 / T).epsilon(1e-12));
    CHECK(est.margin > 0.0);
}

TEST_CASE("cor22 zero coefficients") {
    auto table = PrimeTable::sieve(10);
    auto est = cor22_check(table, {cplx(0, 0), cplx(0, 0)}, 3.5, 10.0, 2, 300);
    CHECK(est.value == 0.0);
}

TEST_CASE("cor22 primes <= 20 with random unit coefficients") {
    auto table = PrimeTable::sieve(30);
    Rng rng(66);
    std::vector<cplx> coeffs;
    for (int i = 0; i < 8; ++i) { // primes up to 20: 2,3,5,7,11,13,17,19
        const double arg = 2.0 * M_PI * rng.uniform01();
        coeffs.emplace_back(std::cos(arg), std::sin(arg));
    }
    const double T = 1000.0;
    const uint32_t q = 2;
    const uint64_t panels = oscillation_safe_panels(2.0 * T, q, std::log(19.0));
    auto est = cor22_check(table, coeffs, 20.0, T, q, panels);
    CHECK(est.value <= est.bound + est.quad_error);

    // doubling the resolution moves the value by less than quad_error
    auto est2 = cor22_check(table, coeffs, 20.0, T, q, panels * 2);
    CHECK(std::abs(est2.value - est.value) <= est.quad_error + 1e-12);
}

TEST_CASE("cor22 bound monotone nonincreasing in T") {
    auto table = PrimeTable::sieve(10);
    std::vector<cplx> coeffs{cplx(0.5, 0.1), cplx(-0.3, 0.7), cplx(0.2, 0.2)};
    const uint32_t q = 2;
    double csum = 0.0;
    for (auto& c : coeffs) csum += std::norm(c);
    const double limit = std::tgamma(q + 1.0) * csum * csum;

    double prev = std::numeric_limits<double>::infinity();
    for (double T : {10.0, 100.0, 1000.0}) {
        const uint64_t panels = oscillation_safe_panels(2.0 * T, q, std::log(5.0));
        auto est = cor22_check(table, coeffs, 5.0, T, q, panels);
        CHECK(est.bound <= prev + 1e-12);
        CHECK(est.bound >= limit - 1e-12);
        prev = est.bound;
    }
    CHECK_THROWS_AS(cor22_check(table, {cplx(1, 0)}, 5.0, 10.0, 1, 100), std::invalid_argument);
}

TEST_CASE("thm23_bound degenerate and closed-form cases") {
    DirichletPoly single({1.0}, {cplx(1, 0)});
    // |L| -> 0: the max factor is 1 and the min(...) term drops
    const double collapse = thm23_bound(single, {0.0, 1.0}, {5.0, 5.0}, 1, 1.0);
    CHECK(collapse == doctest::Approx(1.0).epsilon(1e-12)); // (1!)^{1/2} * ||c|| = 1

    // phi = 1, L = [0,1], J = [0,1], q = 1, Cq = 1: all factors explicit
    const double v = thm23_bound(single, {0.0, 1.0}, {0.0, 1.0}, 1, 1.0);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(thm23_bound(single, {0.0, 1.0}, {0.0, 1.0}, 1, 0.0), std::invalid_argument);
}

TEST_CASE("calibrated Cq covers the suite") {
    auto table = PrimeTable::sieve(100);
    const uint32_t q = 2;
    auto cal = calibrate_cq(table, q, 50, 424242);
    CHECK(cal.cq > 0.0);
    CHECK(cal.cq < 50.0);

    const Interval J{0.0, 50.0}, L{0.0, 2.0};
    for (uint32_t i = 0; i < 50; ++i) {
        auto poly = calibration_poly(table, i, 424242);
        const double emp = empirical_sup_norm(poly, J, L, q, 64, 424242 + 17 * (i + 1));
        CHECK(emp <= cal.cq * thm23_bound(poly, J, L, q, 1.0) * (1.0 + 1e-12));
    }
}

TEST_CASE("xi_for_poly exact and fallback") {
    std::vector<double> phases{std::log(2.0), std::log(3.0), std::log(5.0)};
    std::vector<cplx> coeffs(3, cplx(1, 0));
    DirichletPoly poly(std::move(phases), std::move(coeffs));

    auto exact = xi_for_poly(poly, 2);
    CHECK_FALSE(exact.lower_bound);
    CHECK(exact.value == doctest::Approx(xi_exact(poly.phases(), 2).value));

    auto fb = xi_for_poly(poly, 2, 2); // budget of 2 forces the fallback
    CHECK(fb.lower_bound);
    CHECK(fb.value == doctest::Approx(1.0 / 25.0).epsilon(1e-12));
    CHECK(fb.value <= exact.value);

    DirichletPoly nonprime({0.3, 1.7}, {cplx(1, 0), cplx(1, 0)});
    CHECK_THROWS_AS(xi_for_poly(nonprime, 2, 1), budget_exceeded);
}
