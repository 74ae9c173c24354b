// Acceptance suite: one criterion per function, one pass/fail line each,
// every tolerance pinned in code. Exit code = number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "zerofree/dirichlet.hpp"
#include "zerofree/inequalities.hpp"
#include "zerofree/parallel.hpp"
#include "zerofree/pipeline.hpp"
#include "zerofree/primes.hpp"
#include "zerofree/rng.hpp"
#include "zerofree/spacing.hpp"
#include "zerofree/zeta.hpp"

using namespace zf;
using nlohmann::json;

namespace {

std::string g_binary;
int g_failures = 0;

struct Criterion {
    const char* label;
    double time_limit_s;
    bool (*body)(std::string& note);
};

void run_criterion(int index, const Criterion& c) {
    std::string note;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = c.body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= c.time_limit_s) {
        ok = false;
        note += (note.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", index, c.label,
                elapsed, note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

// 1. exact parameter identities, zero tolerance, every H in [2, 8]
bool crit_exact_identities(std::string& note) {
    for (int H = 2; H <= 8; ++H) {
        const auto p = derive_params(H, 4, 0.75);
        const Rat one(1), q(p.q);
        if (!((one + p.delta) * (one + one / q) - p.B / (Rat(2) * q) == one - p.delta)) {
            note = "identity failed at H=" + std::to_string(H);
            return false;
        }
        if (!(p.two_B < q)) {
            note = "2B < q failed at H=" + std::to_string(H);
            return false;
        }
        if (!(p.B * Rat(2) * (one - Rat(8) * p.delta) < Rat(5))) {
            note = "B < 5/(2(1-8 delta)) failed at H=" + std::to_string(H);
            return false;
        }
        if (!(p.b * Rat(5) >= p.delta * (one - Rat(8) * p.delta))) {
            note = "b >= delta(1-8 delta)/5 failed at H=" + std::to_string(H);
            return false;
        }
        for (const auto& chk : check_invariants(p))
            if (!chk.pass) {
                note = chk.name + " failed at H=" + std::to_string(H);
                return false;
            }
    }
    return true;
}

// 2. sigma0 remark: maximal default delta0 keeps sigma0 above 1 - 1/19^12
bool crit_sigma0_remark(std::string& note) {
    double max_d0 = 0.0, max_d0_pow12 = 0.0;
    for (int H = 2; H <= 8; ++H) {
        const auto p = derive_params(H, 4, 0.75);
        if (p.delta0 > max_d0) {
            max_d0 = p.delta0;
            max_d0_pow12 = p.delta0_pow12;
        }
    }
    // 1 - x underflows double near 1; compare the subtrahends directly
    const double nineteen_pow = std::pow(1.0 / 19.0, 12.0);
    note = "delta0_max = " + std::to_string(max_d0);
    return max_d0_pow12 < nineteen_pow;
}

// 3. Hilbert inequality on 1000 seeded instances, relative slack 1e-9
bool crit_hilbert(std::string& note) {
    Rng rng(20260810);
    for (int i = 0; i < 1000; ++i) {
        const size_t n = 2 + rng.below(49); // N <= 50
        std::vector<double> lambdas;
        std::vector<cplx> x, y;
        double cur = rng.uniform(-5, 5);
        for (size_t k = 0; k < n; ++k) {
            lambdas.push_back(cur);
            cur += 1e-3 + rng.uniform(0, 2);
            x.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
            y.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
        }
        const auto r = hilbert_form(lambdas, x, y);
        if (!(std::abs(r.value) <= r.bound * (1.0 + 1e-9))) {
            note = "violated at instance " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// 4. moment bounds with quadrature self-consistency
bool crit_moments(std::string& note) {
    auto table = PrimeTable::sieve(100);
    MomentOptions mopts;
    for (uint32_t N = 1; N <= 6; ++N) {
        std::vector<double> phases;
        for (uint32_t n = 1; n <= N; ++n)
            phases.push_back(std::log(double(table.nth_prime(n))));
        for (uint32_t q = 1; q <= 3; ++q) {
            for (uint32_t draw = 0; draw < 20; ++draw) {
                Rng rng(777, N * 100 + q * 10 + draw);
                std::vector<cplx> coeffs;
                for (uint32_t n = 0; n < N; ++n)
                    coeffs.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
                DirichletPoly poly(phases, coeffs);
                const double s = rng.uniform(0.0, 3.0), t = rng.uniform(0.0, 3.0);

                for (double j_len : {10.0, 100.0, 1000.0}) {
                    const Interval J{0.0, j_len};
                    const uint64_t panels = oscillation_safe_panels(j_len, q, poly.phi_max());
                    const auto inc = moment_increment(poly, J, q, s, t, panels, mopts);
                    if (!(inc.value <= inc.bound + inc.quad_error)) {
                        note = "increment bound violated";
                        return false;
                    }
                    const auto plain = moment_plain(poly, J, q, panels, mopts);
                    if (!(plain.value <= plain.bound + plain.quad_error)) {
                        note = "plain bound violated";
                        return false;
                    }
                    if (draw == 0) { // self-consistency probe per configuration
                        const auto fine =
                            moment_plain(poly, J, q, panels * 2, mopts);
                        if (!(std::abs(fine.value - plain.value) <=
                              plain.quad_error + 1e-12)) {
                            note = "quadrature self-consistency failed";
                            return false;
                        }
                    }
                }
                for (double T : {100.0, 1000.0}) {
                    const double nmax = double(table.nth_prime(N));
                    const uint64_t panels =
                        oscillation_safe_panels(2.0 * T, q, std::log(nmax));
                    const auto cor = cor22_check(table, coeffs, nmax, T, q, panels, mopts);
                    if (!(cor.value <= cor.bound + cor.quad_error)) {
                        note = "corollary bound violated";
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// 5. spacing bound by exhaustive pair enumeration plus the exact oracle
bool crit_spacing(std::string& note) {
    auto table = PrimeTable::sieve(100);
    for (uint32_t N = 2; N <= 8; ++N) {
        std::vector<uint64_t> primes;
        std::vector<double> phases;
        for (uint32_t n = 1; n <= N; ++n) {
            primes.push_back(table.nth_prime(n));
            phases.push_back(std::log(double(primes.back())));
        }
        for (uint32_t q = 1; q <= 4; ++q) {
            // literal pair loop over E_q x E_q
            const auto eq = enumerate_Eq(N, q);
            double min_form = std::numeric_limits<double>::infinity();
            std::vector<int64_t> best_l(N, 0);
            for (size_t i = 0; i < eq.size(); ++i)
                for (size_t j = i + 1; j < eq.size(); ++j) {
                    double form = 0.0;
                    for (uint32_t n = 0; n < N; ++n)
                        form += (double(eq[i][n]) - double(eq[j][n])) * phases[n];
                    if (std::abs(form) < min_form) {
                        min_form = std::abs(form);
                        for (uint32_t n = 0; n < N; ++n)
                            best_l[n] = int64_t(eq[i][n]) - int64_t(eq[j][n]);
                    }
                }
            const double lb = xi_prime_lower_bound(table, N, q);
            if (!(min_form >= lb)) {
                note = "pair-enumerated xi below p_N^{-q}";
                return false;
            }
            const auto xi = xi_exact(phases, q);
            if (std::abs(xi.value - min_form) > 1e-12) {
                note = "sorted-gap xi disagrees with pair enumeration";
                return false;
            }
            const double exact = prime_log_form_exact(primes, best_l);
            if (std::abs(std::abs(exact) - min_form) > 1e-9) {
                note = "big-integer oracle disagrees beyond 1e-9";
                return false;
            }
        }
    }
    return true;
}

// 6. certified suprema enclose a 100x finer grid maximum
bool crit_certified_sup(std::string& note) {
    for (uint32_t i = 0; i < 50; ++i) {
        Rng rng(4242, i);
        const size_t n = 2 + rng.below(19); // N <= 20
        std::vector<double> phases;
        std::vector<cplx> coeffs;
        while (phases.size() < n) {
            const double phi = rng.uniform(-5.0, 5.0);
            if (std::find(phases.begin(), phases.end(), phi) == phases.end()) {
                phases.push_back(phi);
                coeffs.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
            }
        }
        DirichletPoly poly(std::move(phases), std::move(coeffs));
        const Interval L{-1.0, 1.0};
        const auto cert = certified_sup(poly, L, 0.02);

        const uint64_t fine_n = cert.points * 100;
        std::vector<double> chunk_max(64, 0.0);
        parallel_for(64, default_workers(), [&](std::size_t c) {
            double best = 0.0;
            for (uint64_t k = c; k < fine_n; k += 64) {
                const double t = L.lo + L.length() * double(k) / double(fine_n - 1);
                best = std::max(best, std::abs(poly.eval(t)));
            }
            chunk_max[c] = best;
        });
        const double fine_max = *std::max_element(chunk_max.begin(), chunk_max.end());
        if (!(fine_max >= cert.lower - 1e-12 && fine_max <= cert.upper + 1e-12)) {
            note = "enclosure failed at poly " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// 7. Chebyshev step at desk scale with a calibrated Cq
bool crit_theta(std::string& note) {
    auto table = PrimeTable::sieve(1000);
    const auto cal = calibrate_cq(table, 10, 12, 31337); // q = 5H with H = 2
    DeriveOptions opts;
    opts.cq = cal.cq;
    const auto p = derive_params(2, 2, 0.75, opts); // U^{2B} = 2^{18.5} <= 1e6
    if (!(p.J.hi <= 1e6)) {
        note = "U^{2B} exceeds 1e6";
        return false;
    }
    const auto est = estimate_theta_set(p, table, 200, 31337);
    if (est.analysis_only) {
        note = "unexpected analysis-only degradation";
        return false;
    }
    const double se = std::sqrt(0.75 * 0.25 / 200.0);
    note = "hit_fraction = " + std::to_string(est.hit_fraction);
    return est.hit_fraction >= 0.75 - 3.0 * se;
}

// 8. covering counter on synthetic good sets of measure alpha |J|
bool crit_covering(std::string& note) {
    for (long nu : {1L, 2L}) {
        const auto p = derive_params(2, nu, 0.75);
        for (uint32_t blocks : {1u, 4u}) {
            std::vector<double> good;
            const double window = p.J.length() / double(blocks);
            const uint32_t ppb = 200000 / blocks;
            for (uint32_t b = 0; b < blocks; ++b) {
                const double lo = p.J.lo + double(b) * window;
                const double hi = lo + p.alpha * window;
                for (uint32_t i = 0; i <= ppb; ++i)
                    good.push_back(lo + (hi - lo) * double(i) / double(ppb));
            }
            const auto res = covering_subdivision(p, good);
            if (!(double(res.hit_count) >= p.alpha_bar * double(res.n_cells) - 1.0)) {
                note = "count below alpha_bar threshold (nu=" + std::to_string(nu) +
                       ", blocks=" + std::to_string(blocks) + ")";
                return false;
            }
        }
    }
    return true;
}

// 9. zeta oracle desk values
bool crit_zeta(std::string& note) {
    const auto z2 = zeta_auto(cplx(2.0, 0.0), 1e-12);
    if (!(std::abs(z2.value - cplx(M_PI * M_PI / 6.0, 0.0)) < 1e-9)) {
        note = "zeta(2) off";
        return false;
    }
    const auto zc = count_zeros(100.0, 0.01);
    if (zc.count != 29) {
        note = "zero count " + std::to_string(zc.count);
        return false;
    }
    if (!(std::abs(double(zc.count) - zc.main_term) <= 1.0)) {
        note = "main term mismatch";
        return false;
    }
    const auto box = box_zero_scan(0.9, {10.0, 20.0}, 24);
    if (!(box.min_abs > 0.0 && box.consistent)) {
        note = "box scan not consistent";
        return false;
    }
    return true;
}

// 10. end-to-end certify through the CLI
bool crit_certify(std::string& note) {
    const std::string cmd = g_binary + " certify --H 2 --nu 1 --samples 2000 --seed 1 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        note = "cannot launch the CLI";
        return false;
    }
    std::string output;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
    const int status = pclose(pipe);
    const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (exit_code != 0 && exit_code != 2) {
        note = "exit code " + std::to_string(exit_code);
        return false;
    }
    json rep;
    try {
        rep = json::parse(output);
    } catch (const std::exception& e) {
        note = std::string("report is not JSON: ") + e.what();
        return false;
    }
    std::set<std::string> tags;
    for (const auto& chk : rep["checks"]) {
        tags.insert(chk["tag"].get<std::string>());
        if (chk["status"] == "fail") {
            note = "check failed: " + chk["name"].get<std::string>();
            return false;
        }
    }
    const std::set<std::string> required{"Tu",      "Thm1.1", "minxi", "Prop2.1", "Cor2.2",
                                         "hi",      "him",    "Thm2.3", "params",  "3.6",
                                         "3.12",    "3.14",   "3.16",   "psi",     "Ki"};
    for (const auto& tag : required)
        if (!tags.count(tag)) {
            note = "missing tag " + tag;
            return false;
        }
    note = "exit " + std::to_string(exit_code) + ", all tags present";
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-zerofree>\n";
        return 1;
    }
    g_binary = argv[argc - 1];

    const Criterion criteria[] = {
        {"exact parameter identities in rational arithmetic", 1.0, crit_exact_identities},
        {"sigma0 above 1 - 1/19^12 at the maximal default delta0", 1.0, crit_sigma0_remark},
        {"Hilbert inequality suite, 1000 seeded instances", 10.0, crit_hilbert},
        {"moment bounds with quadrature self-consistency", 300.0, crit_moments},
        {"spacing coefficient against p_N^{-q}, exhaustive pairs", 60.0, crit_spacing},
        {"certified suprema enclose 100x finer grid maxima", 60.0, crit_certified_sup},
        {"Chebyshev good-theta step at desk scale", 600.0, crit_theta},
        {"covering counter on synthetic good sets", 10.0, crit_covering},
        {"zeta oracle desk values", 120.0, crit_zeta},
        {"end-to-end certify run", 900.0, crit_certify},
    };
    int index = 1;
    for (const auto& c : criteria) run_criterion(index++, c);

    if (g_failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", std::size(criteria));
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures;
}
