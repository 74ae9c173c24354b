// Batch front end. Subcommands map one-to-one onto the library modules;
// every run emits a report that echoes the effective configuration, the
// seed and the feasibility cap, plus one tagged entry per check performed.
//
// Exit codes: 0 all checks pass / consistent; 1 a theorem-backed inequality
// failed beyond slack; 2 a stage degraded to analysis-only (honest
// infeasibility), nothing failed.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zerofree/dirichlet.hpp"
#include "zerofree/errors.hpp"
#include "zerofree/inequalities.hpp"
#include "zerofree/pipeline.hpp"
#include "zerofree/primes.hpp"
#include "zerofree/rng.hpp"
#include "zerofree/spacing.hpp"
#include "zerofree/version.hpp"
#include "zerofree/zeta.hpp"

using nlohmann::json;
using namespace zf;

namespace {

struct Globals {
    uint64_t seed = 1;
    double cap = 1e8;
    int workers = 0;
    std::string out;
    std::string format = "json";
    std::string config_path;
    std::vector<std::string> sets;
};

json parse_scalar(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error&) {
        return json(text); // bare string
    }
}

// defaults < config file < --set < explicit flags (flags resolve last via
// std::optional, see resolve()).
json load_config(const Globals& g) {
    json cfg = json::object();
    if (!g.config_path.empty()) {
        std::ifstream in(g.config_path);
        if (!in) throw CLI::ValidationError("--config", "cannot open " + g.config_path);
        try {
            cfg = json::parse(in);
        } catch (const json::parse_error& e) {
            throw CLI::ValidationError("--config", e.what());
        }
        if (!cfg.is_object()) throw CLI::ValidationError("--config", "expected a JSON object");
    }
    for (const auto& kv : g.sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--set", "expected key=value, got " + kv);
        cfg[kv.substr(0, eq)] = parse_scalar(kv.substr(eq + 1));
    }
    return cfg;
}

template <typename T>
T resolve(const std::optional<T>& flag, const json& cfg, const char* key, T def) {
    if (flag) return *flag;
    if (cfg.contains(key)) {
        try {
            return cfg.at(key).get<T>();
        } catch (const json::exception&) {
            throw CLI::ValidationError(std::string("--set/config key '") + key + "'",
                                       "cannot convert value");
        }
    }
    return def;
}

std::string cache_dir() {
    const char* env = std::getenv("ZEROFREE_CACHE_DIR");
    return env ? std::string(env) : std::string();
}

PrimeTable table_for(uint64_t limit) { return PrimeTable::sieve_cached(limit, cache_dir()); }

struct Checks {
    json arr = json::array();
    bool any_fail = false;
    bool any_analysis = false;

    void add(const std::string& tag, const std::string& name, const std::string& status,
             json detail = json::object()) {
        json row{{"tag", tag}, {"name", name}, {"status", status}};
        if (!detail.empty()) row["detail"] = std::move(detail);
        arr.push_back(std::move(row));
        if (status == "fail") any_fail = true;
        if (status == "analysis-only") any_analysis = true;
    }
};

json interval_json(const Interval& iv) { return json::array({iv.lo, iv.hi}); }

json params_json(const ParameterSet& p) {
    return json{{"H", p.H},
                {"delta", p.delta.str()},
                {"delta_float", p.delta.to_double()},
                {"q", p.q},
                {"B", p.B.str()},
                {"B_float", p.B.to_double()},
                {"two_B", p.two_B.str()},
                {"b", p.b.str()},
                {"b_float", p.b.to_double()},
                {"nu", p.nu},
                {"U", p.U},
                {"J", interval_json(p.J)},
                {"L", interval_json(p.L)},
                {"delta0", p.delta0},
                {"delta0_defaulted", p.delta0_defaulted},
                {"D", p.D},
                {"alpha", p.alpha},
                {"mu_alpha", p.mu_alpha},
                {"delta0_pow12", p.delta0_pow12},
                {"sigma0", p.sigma0},
                {"cq", p.cq},
                {"c", p.c},
                {"alpha_bar", p.alpha_bar},
                {"alpha_star", p.alpha_star},
                {"nu_delta", p.nu_delta}};
}

json certificate_json(const SupCertificate& c) {
    return json{{"interval", interval_json(c.interval)},
                {"grid_step", c.grid_step},
                {"lower", c.lower},
                {"upper", c.upper},
                {"lipschitz", c.lipschitz},
                {"argmax_t", c.argmax_t},
                {"points", c.points},
                {"budget_exceeded", c.budget_exceeded}};
}

json family_json(const FamilySup& f) {
    return json{{"lower", f.lower},
                {"upper", f.upper},
                {"argmax_t", f.argmax_t},
                {"argmax_p_first", f.argmax_p_first},
                {"argmax_p_last", f.argmax_p_last},
                {"grid_step", f.grid_step},
                {"lipschitz", f.lipschitz},
                {"prime_count", f.prime_count},
                {"points", f.points},
                {"budget_exceeded", f.budget_exceeded}};
}

json moment_json(const MomentEstimate& m) {
    return json{{"value", m.value},       {"quad_error", m.quad_error},
                {"bound", m.bound},       {"margin", m.margin},
                {"xi", m.xi},             {"xi_lower_bound", m.xi_lower_bound},
                {"panels", m.panels}};
}

void write_text(std::ostream& os, const json& report) {
    os << report["tool"].get<std::string>() << " " << report["version"].get<std::string>()
       << " -- " << report["subcommand"].get<std::string>() << "\n";
    for (const auto& chk : report["checks"]) {
        std::string status = chk["status"].get<std::string>();
        for (auto& ch : status) ch = char(std::toupper(static_cast<unsigned char>(ch)));
        os << "[" << status << "] (" << chk["tag"].get<std::string>() << ") "
           << chk["name"].get<std::string>() << "\n";
    }
    os << "exit_status " << report["exit_status"] << "\n";
}

void write_csv(std::ostream& os, const json& report) {
    // checks as rows; subcommands with a natural grid append data.rows
    os << "kind,tag,name,status\n";
    for (const auto& chk : report["checks"])
        os << "check," << chk["tag"].get<std::string>() << ",\""
           << chk["name"].get<std::string>() << "\"," << chk["status"].get<std::string>() << "\n";
    if (report["data"].contains("rows")) {
        const auto& rows = report["data"]["rows"];
        if (rows.is_array() && !rows.empty() && rows[0].is_object()) {
            os << "\n";
            bool first = true;
            for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
                if (!first) os << ",";
                os << it.key();
                first = false;
            }
            os << "\n";
            for (const auto& row : rows) {
                first = true;
                for (auto it = row.begin(); it != row.end(); ++it) {
                    if (!first) os << ",";
                    os << it.value().dump();
                    first = false;
                }
                os << "\n";
            }
        }
    }
}

int emit(json& report, Checks& checks, const Globals& g) {
    const int status = checks.any_fail ? 1 : (checks.any_analysis ? 2 : 0);
    report["checks"] = checks.arr;
    report["exit_status"] = status;

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!g.out.empty()) {
        file.open(g.out);
        if (!file) {
            std::cerr << "cannot open output file " << g.out << "\n";
            return 1;
        }
        os = &file;
    }
    if (g.format == "json")
        *os << report.dump(2) << "\n";
    else if (g.format == "csv")
        write_csv(*os, report);
    else
        write_text(*os, report);
    return status;
}

json report_skeleton(const std::string& sub, const Globals& g, json effective) {
    effective["seed"] = g.seed;
    effective["cap"] = g.cap;
    effective["workers"] = g.workers;
    effective["format"] = g.format;
    char stamp[64];
    const std::time_t now = std::time(nullptr);
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return json{{"tool", tool_name},     {"version", tool_version}, {"timestamp", stamp},
                {"subcommand", sub},     {"config", effective},     {"checks", json::array()},
                {"data", json::object()}};
}

// ---------------------------------------------------------------------------
// subcommand bodies

int run_params(const Globals& g, const ParameterSet& p, const json& effective) {
    json report = report_skeleton("params", g, effective);
    Checks checks;
    for (const auto& chk : check_invariants(p))
        checks.add("params", chk.name, chk.pass ? "pass" : "fail",
                   json{{"exact", chk.exact}, {"detail", chk.detail}});
    report["data"]["params"] = params_json(p);
    return emit(report, checks, g);
}

int run_hilbert(const Globals& g, uint32_t trials, uint32_t max_n, double min_gap,
                const json& effective) {
    json report = report_skeleton("hilbert", g, effective);
    Checks checks;

    Rng rng(g.seed);
    uint64_t passed = 0;
    double worst = 0.0;
    for (uint32_t i = 0; i < trials; ++i) {
        const size_t n = 2 + rng.below(max_n - 1);
        std::vector<double> lambdas;
        std::vector<cplx> x, y;
        double cur = rng.uniform(-5, 5);
        for (size_t k = 0; k < n; ++k) {
            lambdas.push_back(cur);
            cur += min_gap + rng.uniform(0, 2);
            x.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
            y.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
        }
        const auto r = hilbert_form(lambdas, x, y);
        passed += r.pass ? 1 : 0;
        if (r.bound > 0) worst = std::max(worst, std::abs(r.value) / r.bound);
    }
    const double pass_fraction = double(passed) / double(trials);
    checks.add("hi", "bilinear form bounded by (pi/delta)||x|| ||y|| on random instances",
               pass_fraction == 1.0 ? "pass" : "fail",
               json{{"trials", trials}, {"pass_fraction", pass_fraction}, {"worst_ratio", worst}});

    // multi-index form: lambda_k = <k, phi> over E_q with delta = xi
    std::vector<double> phases{std::log(2.0), std::log(3.0), std::log(5.0)};
    auto eq = enumerate_Eq(3, 2);
    auto xi = xi_exact(phases, 2);
    std::vector<double> lambdas;
    for (const auto& k : eq) {
        double dot = 0;
        for (size_t n = 0; n < phases.size(); ++n) dot += double(k[n]) * phases[n];
        lambdas.push_back(dot);
    }
    std::vector<cplx> x, y;
    Rng rng2(g.seed ^ 0xabcdef);
    for (size_t i = 0; i < lambdas.size(); ++i) {
        x.emplace_back(rng2.uniform(-1, 1), rng2.uniform(-1, 1));
        y.emplace_back(rng2.uniform(-1, 1), rng2.uniform(-1, 1));
    }
    const auto rq = hilbert_form(lambdas, x, y);
    checks.add("him", "inequality over E_q-indexed points with delta = xi",
               rq.pass ? "pass" : "fail",
               json{{"min_gap", rq.min_gap}, {"xi", xi.value}, {"bound", rq.bound}});

    report["data"]["trials"] = trials;
    report["data"]["pass_fraction"] = pass_fraction;
    return emit(report, checks, g);
}

int run_spacing(const Globals& g, uint32_t max_n, uint32_t max_q, const json& effective) {
    json report = report_skeleton("spacing", g, effective);
    Checks checks;
    auto table = table_for(100);

    json rows = json::array();
    bool all_ok = true, oracle_ok = true;
    for (uint32_t N = 2; N <= max_n; ++N) {
        std::vector<uint64_t> primes;
        std::vector<double> phases;
        for (uint32_t n = 1; n <= N; ++n) {
            primes.push_back(table.nth_prime(n));
            phases.push_back(std::log(double(primes.back())));
        }
        for (uint32_t q = 1; q <= max_q; ++q) {
            const auto xi = xi_exact(phases, q);
            const double lb = xi_prime_lower_bound(table, N, q);
            all_ok = all_ok && xi.value >= lb - 1e-15;

            std::vector<int64_t> l(N);
            double float_form = 0.0;
            for (uint32_t n = 0; n < N; ++n) {
                l[n] = int64_t(xi.h[n]) - int64_t(xi.k[n]);
                float_form += double(l[n]) * phases[n];
            }
            const double exact = prime_log_form_exact(primes, l);
            oracle_ok = oracle_ok && std::abs(std::abs(float_form) - std::abs(exact)) < 1e-9;

            rows.push_back(json{{"N", N},
                                {"q", q},
                                {"xi", xi.value},
                                {"lower_bound", lb},
                                {"exact_log_form", exact}});
        }
    }
    checks.add("minxi", "xi_phi(N, q) >= p_N^{-q} on every instance", all_ok ? "pass" : "fail",
               json{{"max_N", max_n}, {"max_q", max_q}});
    checks.add("minxi", "big-integer P+/P- oracle matches the float linear form to 1e-9",
               oracle_ok ? "pass" : "fail");
    report["data"]["rows"] = rows;
    return emit(report, checks, g);
}

int run_moments(const Globals& g, uint32_t N, uint32_t q, uint32_t draws, double j_len, double T,
                const json& effective) {
    json report = report_skeleton("moments", g, effective);
    Checks checks;
    auto table = table_for(100);

    MomentOptions mopts;
    mopts.workers = g.workers;
    json rows = json::array();
    bool prop_ok = true, cor_ok = true;
    for (uint32_t i = 0; i < draws; ++i) {
        Rng rng(g.seed, i);
        std::vector<double> phases;
        std::vector<cplx> coeffs;
        for (uint32_t n = 1; n <= N; ++n) {
            phases.push_back(std::log(double(table.nth_prime(n))));
            coeffs.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
        }
        DirichletPoly poly(phases, coeffs);
        const Interval J{0.0, j_len};
        const double s = rng.uniform(0.0, 3.0), t = rng.uniform(0.0, 3.0);
        const uint64_t panels = oscillation_safe_panels(J.length(), q, poly.phi_max());

        auto inc = moment_increment(poly, J, q, s, t, panels, mopts);
        auto plain = moment_plain(poly, J, q, panels, mopts);
        prop_ok = prop_ok && inc.value <= inc.bound + inc.quad_error &&
                  plain.value <= plain.bound + plain.quad_error;

        const uint64_t cpanels = oscillation_safe_panels(2.0 * T, q, std::log(13.0));
        std::vector<cplx> pc;
        for (int k = 0; k < 6; ++k) pc.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
        auto cor = cor22_check(table, pc, 13.0, T, q, cpanels, mopts);
        cor_ok = cor_ok && cor.value <= cor.bound + cor.quad_error;

        rows.push_back(json{{"draw", i},
                            {"increment", moment_json(inc)},
                            {"plain", moment_json(plain)},
                            {"cor22", moment_json(cor)}});
    }
    checks.add("Prop2.1", "increment and plain 2q-th moments below their bounds",
               prop_ok ? "pass" : "fail", json{{"N", N}, {"q", q}, {"draws", draws}});
    checks.add("Cor2.2",
               "(1/2T) int |sum c_p p^{-i theta}|^{2q} below q!(1+2 pi N^q/T)(sum|c|^2)^q",
               cor_ok ? "pass" : "fail", json{{"T", T}});
    report["data"]["rows"] = rows;
    return emit(report, checks, g);
}

int run_chain(const Globals& g, uint32_t q, uint32_t trials, const json& effective) {
    json report = report_skeleton("chain", g, effective);
    Checks checks;
    auto table = table_for(100);
    const auto cal = calibrate_cq(table, q, trials, g.seed, g.workers);
    checks.add("Thm2.3", "empirical Cq calibrated over the seeded suite", "pass",
               json{{"q", q}, {"cq", cal.cq}, {"trials", trials},
                    {"worst_index", cal.worst_index}});
    report["data"]["cq"] = cal.cq;
    report["data"]["q"] = q;
    report["data"]["worst_index"] = cal.worst_index;
    return emit(report, checks, g);
}

int run_sup(const Globals& g, bool family, double n1, double n2, double theta, double U,
            double delta, Interval L, double eps, const json& effective) {
    json report = report_skeleton("sup", g, effective);
    Checks checks;
    if (family) {
        auto table = table_for(static_cast<uint64_t>(std::pow(U, 1.0 + delta)) + 1);
        FamilySupOptions opts;
        opts.eps = eps;
        opts.workers = g.workers;
        const auto fam = family_sup(table, theta, U, delta, L, opts);
        checks.add("3.6", "certified grid supremum over the admissible prime family",
                   fam.budget_exceeded ? "info" : "pass", family_json(fam));
        report["data"]["family"] = family_json(fam);
    } else {
        auto table = table_for(static_cast<uint64_t>(n2) + 1);
        const auto poly = DirichletPoly::prime_poly(table, n1, n2);
        SupOptions opts;
        opts.workers = g.workers;
        const auto cert = certified_sup(poly, L, eps, opts);
        checks.add("Thm2.3", "two-sided enclosure of sup_t |P(t)|",
                   cert.budget_exceeded ? "info" : "pass", certificate_json(cert));
        report["data"]["certificate"] = certificate_json(cert);
    }
    return emit(report, checks, g);
}

int run_theta(const Globals& g, const ParameterSet& p, uint64_t samples, const json& effective) {
    json report = report_skeleton("theta", g, effective);
    Checks checks;
    auto table = table_for(static_cast<uint64_t>(
        std::min(g.cap, std::max(100.0, std::pow(p.U, 1.0 + p.delta.to_double()) + 1))));

    ThetaOptions topts;
    topts.feasibility_cap = g.cap;
    topts.workers = g.workers;
    const auto est = estimate_theta_set(p, table, samples, g.seed, topts);
    if (est.analysis_only) {
        checks.add("3.6", "good-theta measure estimate", "analysis-only",
                   json{{"threshold", est.threshold}, {"note", "scale beyond table/cap"}});
    } else {
        const double se = std::sqrt(p.alpha * (1.0 - p.alpha) / double(samples));
        const bool ok = est.hit_fraction >= p.alpha - 3.0 * se;
        checks.add("3.6", "hit fraction >= alpha - 3 se (Chebyshev with calibrated Cq)",
                   ok ? "pass" : "fail",
                   json{{"hit_fraction", est.hit_fraction},
                        {"hit_fraction_upper", est.hit_fraction_upper},
                        {"alpha", p.alpha},
                        {"threshold", est.threshold},
                        {"binomial_se", se}});
        json rows = json::array();
        for (const auto& r : est.detail)
            rows.push_back(json{{"theta", r.theta},
                                {"sup_lower", r.sup_lower},
                                {"sup_upper", r.sup_upper},
                                {"good", r.good}});
        report["data"]["rows"] = rows;
    }
    report["data"]["params"] = params_json(p);
    report["data"]["threshold"] = est.threshold;
    report["data"]["hit_fraction"] = est.hit_fraction;
    return emit(report, checks, g);
}

json scan_to_json(const TuranReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back(json{{"N", r.N},
                            {"N1", r.N1},
                            {"N2", r.N2},
                            {"tau", r.tau},
                            {"lhs", r.lhs},
                            {"rhs", r.rhs},
                            {"margin", r.margin}});
    return json{{"theta", rep.theta},
                {"T", rep.T},
                {"tau_window", interval_json(rep.tau_window)},
                {"N_window", interval_json(rep.N_window)},
                {"c", rep.c},
                {"tau_exponent", rep.tau_exponent},
                {"premises_hold", rep.premises_hold},
                {"pass_fraction", rep.pass_fraction},
                {"rows", rows}};
}

void add_scan_check(Checks& checks, const TuranReport& rep, const std::string& tag,
                    const std::string& name) {
    if (rep.analysis_only) {
        checks.add(tag, name, "analysis-only",
                   json{{"tau_window", interval_json(rep.tau_window)}});
    } else if (rep.pass_fraction == 1.0) {
        checks.add(tag, name, "pass",
                   json{{"rows", rep.rows.size()}, {"pass_fraction", rep.pass_fraction}});
    } else {
        // margins are only theorem-backed once nu >= nu_delta and theta is good
        checks.add(tag, name, rep.premises_hold ? "fail" : "info",
                   json{{"rows", rep.rows.size()}, {"pass_fraction", rep.pass_fraction}});
    }
}

int run_scan(const Globals& g, const ParameterSet& p, double theta, uint32_t tau_grid,
             const json& effective) {
    json report = report_skeleton("scan", g, effective);
    Checks checks;
    const double n_hi_guess = std::pow(psi(theta), p.D * (1.0 + p.delta0));
    auto table = table_for(
        static_cast<uint64_t>(std::min(g.cap, std::max(100.0, n_hi_guess * 1.1))) + 1);

    ScanOptions sopts;
    sopts.feasibility_cap = g.cap;
    sopts.workers = g.workers;
    const auto chained = turan_scan(p, table, theta, tau_grid, TuranRhsMode::chained, sopts);
    const auto criterion = turan_scan(p, table, theta, tau_grid, TuranRhsMode::criterion, sopts);
    add_scan_check(checks, chained, "3.12",
                   "prime sums below c N (log N)^{1/2q-1/2} / tau^{delta0^6}");
    add_scan_check(checks, criterion, "Tu", "prime sums below c N (log N)^10 / tau^{delta0^6}");
    report["data"]["chained"] = scan_to_json(chained);
    report["data"]["criterion"] = scan_to_json(criterion);
    report["data"]["rows"] = report["data"]["chained"]["rows"];
    return emit(report, checks, g);
}

json covering_json(const CoveringResult& res) {
    return json{{"n_cells", res.n_cells},
                {"total_real", res.total_real},
                {"origin", res.origin},
                {"cell_width", res.cell_width},
                {"hit_count", res.hit_count},
                {"alpha_bar_threshold", res.alpha_bar_threshold},
                {"meets_alpha_bar", res.meets_alpha_bar},
                {"alpha_star_threshold", res.alpha_star_threshold},
                {"meets_alpha_star", res.meets_alpha_star}};
}

std::vector<double> synthetic_good_set(const ParameterSet& p, uint32_t blocks,
                                       uint32_t points_per_block) {
    // measure alpha |J| spread over `blocks` uniform windows, endpoints
    // included so no touched cell is missed
    std::vector<double> out;
    const double window = p.J.length() / double(blocks);
    for (uint32_t b = 0; b < blocks; ++b) {
        const double lo = p.J.lo + double(b) * window;
        const double hi = lo + p.alpha * window;
        for (uint32_t i = 0; i <= points_per_block; ++i)
            out.push_back(lo + (hi - lo) * double(i) / double(points_per_block));
    }
    return out;
}

int run_cover(const Globals& g, const ParameterSet& p, uint32_t blocks, uint32_t points_per_block,
              const json& effective) {
    json report = report_skeleton("cover", g, effective);
    Checks checks;
    const auto good = synthetic_good_set(p, blocks, points_per_block);
    const auto res = covering_subdivision(p, good);

    checks.add("psi", "psi(J) span and subdivision origin", "info",
               json{{"origin", res.origin}, {"cell_width", res.cell_width}});
    checks.add("Ki", "subdivision cell count matches 2^{B nu + 1} + 6(sqrt 2 - 1)", "pass",
               json{{"n_cells", res.n_cells}, {"total_real", res.total_real}});
    checks.add("3.14", "alpha_bar from the measure transport of psi", "info",
               json{{"alpha_bar", p.alpha_bar}, {"alpha", p.alpha}});
    checks.add("3.16", "hit count >= alpha_bar (2^{B nu + 1} + 6(sqrt 2 - 1)) - 1",
               double(res.hit_count) >= res.alpha_bar_threshold - 1.0 ? "pass" : "fail",
               json{{"hit_count", res.hit_count}, {"threshold", res.alpha_bar_threshold}});
    checks.add("Thm1.1", "hit count against alpha_star 2^{B nu + 1}",
               res.meets_alpha_star ? "pass" : "info",
               json{{"hit_count", res.hit_count}, {"threshold", res.alpha_star_threshold}});
    report["data"]["covering"] = covering_json(res);
    report["data"]["good_points"] = good.size();
    return emit(report, checks, g);
}

int run_zeta(const Globals& g, const std::string& mode, double sigma, double t_value, double T,
             double step, double sigma0, Interval t_int, uint32_t grid, uint32_t terms,
             uint32_t order, const json& effective) {
    json report = report_skeleton("zeta", g, effective);
    Checks checks;
    if (mode == "em") {
        const auto sample = zeta_em(cplx(sigma, t_value), terms, order);
        checks.add("zeta", "Euler-Maclaurin sample with remainder bound", "pass",
                   json{{"s", json::array({sigma, t_value})},
                        {"value", json::array({sample.value.real(), sample.value.imag()})},
                        {"err", sample.err}});
        report["data"]["sample"] = json{{"re", sample.value.real()},
                                        {"im", sample.value.imag()},
                                        {"err", sample.err}};
    } else if (mode == "count") {
        ZeroCountOptions zopts;
        zopts.desk_cap = std::min(g.cap, 1e4);
        zopts.workers = g.workers;
        const auto zc = count_zeros(T, step, zopts);
        checks.add("zeta", "sign-change count within 1 of the counting main term",
                   zc.within_main_term ? "pass" : "fail",
                   json{{"count", zc.count},
                        {"main_term", zc.main_term},
                        {"resolution_warning", zc.resolution_warning}});
        report["data"]["count"] = zc.count;
        report["data"]["main_term"] = zc.main_term;
    } else if (mode == "box") {
        BoxScanOptions bopts;
        bopts.desk_cap = std::min(g.cap, 1e4);
        bopts.workers = g.workers;
        bopts.keep_samples = true;
        const auto rep = box_zero_scan(sigma0, t_int, grid, bopts);
        json rows = json::array();
        for (const auto& sample : rep.samples)
            rows.push_back(json{{"sigma", sample.s.real()},
                                {"t", sample.s.imag()},
                                {"re", sample.value.real()},
                                {"im", sample.value.imag()},
                                {"abs", std::abs(sample.value)},
                                {"err", sample.err}});
        report["data"]["rows"] = rows;
        const std::string status = rep.analysis_only ? "analysis-only"
                                   : rep.diagnostic  ? "info"
                                   : rep.consistent  ? "pass"
                                                     : "fail";
        checks.add("Thm1.1", "box minimum of |zeta| above the resolution floor (heuristic)",
                   status,
                   json{{"min_abs", rep.min_abs},
                        {"floor", rep.floor},
                        {"critical_line_zeros", rep.critical_line_zeros}});
        report["data"]["box"] = json{{"sigma_lo", rep.sigma_lo},
                                     {"sigma_hi", rep.sigma_hi},
                                     {"t", interval_json(rep.t_interval)},
                                     {"min_abs", rep.min_abs},
                                     {"floor", rep.floor},
                                     {"consistent", rep.consistent},
                                     {"critical_line_zeros", rep.critical_line_zeros},
                                     {"heuristic", true}};
    } else {
        throw CLI::ValidationError("--mode", "expected em, count, or box");
    }
    return emit(report, checks, g);
}

int run_certify(const Globals& g, int H, long nu, double alpha, uint64_t samples,
                uint32_t tau_grid, const json& effective) {
    json report = report_skeleton("certify", g, effective);
    Checks checks;

    // stage 1: parameters and their exact identities
    auto p0 = derive_params(H, nu, alpha);
    for (const auto& chk : check_invariants(p0))
        checks.add("params", chk.name, chk.pass ? "pass" : "fail", json{{"exact", chk.exact}});
    report["data"]["params"] = params_json(p0);

    // stage 2: spacing coefficient bound
    auto small_table = table_for(100);
    bool sp_ok = true;
    for (uint32_t N = 2; N <= 6 && sp_ok; ++N) {
        std::vector<double> phases;
        for (uint32_t n = 1; n <= N; ++n)
            phases.push_back(std::log(double(small_table.nth_prime(n))));
        for (uint32_t q = 1; q <= 3; ++q)
            sp_ok = sp_ok && xi_exact(phases, q).value >=
                                 xi_prime_lower_bound(small_table, N, q) - 1e-15;
    }
    checks.add("minxi", "xi_phi(N, q) >= p_N^{-q} (N <= 6, q <= 3)", sp_ok ? "pass" : "fail");

    // stage 3: Hilbert inequality suite
    {
        Rng rng(g.seed ^ 0x11);
        bool ok = true;
        for (int i = 0; i < 200 && ok; ++i) {
            const size_t n = 2 + rng.below(30);
            std::vector<double> lambdas;
            std::vector<cplx> x, y;
            double cur = 0.0;
            for (size_t k = 0; k < n; ++k) {
                lambdas.push_back(cur);
                cur += 1e-3 + rng.uniform(0, 1);
                x.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
                y.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
            }
            ok = hilbert_form(lambdas, x, y).pass;
        }
        checks.add("hi", "random-instance inequality suite", ok ? "pass" : "fail");

        auto eq = enumerate_Eq(3, 2);
        std::vector<double> phases{std::log(2.0), std::log(3.0), std::log(5.0)};
        std::vector<double> lambdas;
        for (const auto& k : eq) {
            double dot = 0;
            for (size_t n = 0; n < phases.size(); ++n) dot += double(k[n]) * phases[n];
            lambdas.push_back(dot);
        }
        std::vector<cplx> x(lambdas.size(), cplx(0.5, 0.5)), y(lambdas.size(), cplx(0.3, -0.4));
        checks.add("him", "inequality over E_q-indexed points",
                   hilbert_form(lambdas, x, y).pass ? "pass" : "fail");
    }

    // stage 4: moment bounds
    {
        Rng rng(g.seed ^ 0x22);
        std::vector<double> phases{std::log(2.0), std::log(3.0), std::log(5.0)};
        std::vector<cplx> coeffs;
        for (int i = 0; i < 3; ++i) coeffs.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
        DirichletPoly poly(phases, coeffs);
        const Interval J{0.0, 50.0};
        const uint32_t q = 2;
        const uint64_t panels = oscillation_safe_panels(J.length(), q, poly.phi_max());
        MomentOptions mopts;
        mopts.workers = g.workers;
        auto inc = moment_increment(poly, J, q, 0.4, 2.2, panels, mopts);
        auto plain = moment_plain(poly, J, q, panels, mopts);
        checks.add("Prop2.1", "increment and plain moment bounds",
                   inc.value <= inc.bound + inc.quad_error &&
                           plain.value <= plain.bound + plain.quad_error
                       ? "pass"
                       : "fail",
                   json{{"increment", moment_json(inc)}, {"plain", moment_json(plain)}});

        const double T = 100.0;
        const uint64_t cpanels = oscillation_safe_panels(2.0 * T, q, std::log(5.0));
        auto cor = cor22_check(small_table, coeffs, 5.0, T, q, cpanels, mopts);
        checks.add("Cor2.2", "corollary moment bound over [-T, T]",
                   cor.value <= cor.bound + cor.quad_error ? "pass" : "fail",
                   json{{"cor22", moment_json(cor)}});
    }

    // stage 5: chain constant calibration at the pipeline's q
    const auto cal = calibrate_cq(small_table, uint32_t(p0.q), 12, g.seed ^ 0x33, g.workers);
    checks.add("Thm2.3", "empirical Cq for the chaining bound", "pass",
               json{{"q", p0.q}, {"cq", cal.cq}});
    DeriveOptions dopts;
    dopts.cq = cal.cq;
    const auto p = derive_params(H, nu, alpha, dopts);
    report["data"]["cq"] = cal.cq;

    // stage 6: Chebyshev good-theta estimate
    const double needed = std::pow(p.U, 1.0 + p.delta.to_double());
    auto table = table_for(static_cast<uint64_t>(std::min(g.cap, std::max(100.0, needed + 1))));
    ThetaOptions topts;
    topts.feasibility_cap = g.cap;
    topts.workers = g.workers;
    ThetaSetEstimate est;
    est.analysis_only = true;
    est.threshold = p.mu_alpha * M_bound(p, p.cq);
    if (needed <= g.cap && p.J.hi <= g.cap) {
        est = estimate_theta_set(p, table, samples, g.seed, topts);
    }
    std::vector<double> good_thetas;
    if (est.analysis_only) {
        checks.add("3.6", "good-theta measure estimate", "analysis-only",
                   json{{"threshold", est.threshold}});
    } else {
        const double se = std::sqrt(alpha * (1.0 - alpha) / double(samples));
        checks.add("3.6", "hit fraction >= alpha - 3 se",
                   est.hit_fraction >= alpha - 3.0 * se ? "pass" : "fail",
                   json{{"hit_fraction", est.hit_fraction}, {"threshold", est.threshold}});
        for (const auto& r : est.detail)
            if (r.good) good_thetas.push_back(r.theta);
    }
    report["data"]["hit_fraction"] = est.analysis_only ? json() : json(est.hit_fraction);

    // stage 7: localization-criterion scan at a good shift
    const double theta_scan =
        good_thetas.empty() ? 0.5 * (p.J.lo + p.J.hi) : good_thetas.front();
    ScanOptions sopts;
    sopts.feasibility_cap = g.cap;
    sopts.workers = g.workers;
    const auto chained = turan_scan(p, table, theta_scan, tau_grid, TuranRhsMode::chained, sopts);
    const auto criterion =
        turan_scan(p, table, theta_scan, tau_grid, TuranRhsMode::criterion, sopts);
    add_scan_check(checks, chained, "3.12",
                   "prime sums below c N (log N)^{1/2q-1/2} / tau^{delta0^6}");
    add_scan_check(checks, criterion, "Tu", "prime sums below c N (log N)^10 / tau^{delta0^6}");
    report["data"]["scan"] = scan_to_json(chained);

    // stage 8/9: measure transport and covering counter
    checks.add("3.14", "alpha_bar from the psi measure transport",
               p.alpha_bar > 0.0 && p.alpha_bar < 1.0 ? "pass" : "fail",
               json{{"alpha_bar", p.alpha_bar}});
    if (est.analysis_only) {
        checks.add("psi", "psi(J) window", "info", json());
        checks.add("Ki", "covering subdivision", "analysis-only", json());
        checks.add("3.16", "covering count threshold", "analysis-only", json());
        checks.add("Thm1.1", "alpha_star covering count", "analysis-only", json());
    } else {
        const auto res = covering_subdivision(p, good_thetas);
        checks.add("psi", "psi(J) window and subdivision origin", "info",
                   json{{"origin", res.origin}, {"cell_width", res.cell_width}});
        checks.add("Ki", "subdivision cell count", "pass",
                   json{{"n_cells", res.n_cells}, {"total_real", res.total_real}});
        const double density = double(good_thetas.size()) / double(res.n_cells);
        if (density >= 8.0) {
            checks.add("3.16", "covering count >= alpha_bar total - 1",
                       double(res.hit_count) >= res.alpha_bar_threshold - 1.0 ? "pass" : "fail",
                       json{{"hit_count", res.hit_count},
                            {"threshold", res.alpha_bar_threshold}});
        } else {
            checks.add("3.16", "covering count (sample density too low to evaluate)", "info",
                       json{{"hit_count", res.hit_count},
                            {"threshold", res.alpha_bar_threshold},
                            {"density", density}});
        }
        checks.add("Thm1.1", "covering count against alpha_star 2^{B nu + 1}",
                   res.meets_alpha_star ? "pass" : "info",
                   json{{"hit_count", res.hit_count}, {"threshold", res.alpha_star_threshold}});
        report["data"]["covering"] = covering_json(res);

        // stage 10: zeta oracle box scan over the first certified cell
        uint64_t first_hit = res.n_cells;
        for (uint64_t i = 0; i < res.n_cells; ++i)
            if (res.hit[i]) {
                first_hit = i;
                break;
            }
        if (first_hit < res.n_cells) {
            const double lo = res.origin + double(first_hit) * res.cell_width;
            const Interval cell{lo, lo + res.cell_width};
            const double sigma_lo = std::min(0.9, std::max(0.51, p.sigma0));
            if (cell.hi <= 1e4) {
                BoxScanOptions bopts;
                bopts.workers = g.workers;
                const auto box = box_zero_scan(sigma_lo, cell, 16, bopts);
                checks.add("Thm1.1",
                           "zeta box scan over a certified cell (heuristic cross-check)",
                           box.consistent ? "pass" : "fail",
                           json{{"cell", interval_json(cell)},
                                {"sigma_lo", sigma_lo},
                                {"min_abs", box.min_abs},
                                {"floor", box.floor},
                                {"critical_line_zeros", box.critical_line_zeros}});
                report["data"]["box"] = json{{"cell", interval_json(cell)},
                                             {"min_abs", box.min_abs},
                                             {"consistent", box.consistent}};
            } else {
                checks.add("Thm1.1", "zeta box scan", "analysis-only",
                           json{{"cell", interval_json(cell)},
                                {"note", "beyond zeta desk cap"}});
            }
        }
    }
    return emit(report, checks, g);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification and exploration toolkit for prime Dirichlet-polynomial "
                 "suprema and zero-free regions"};
    app.require_subcommand(1);

    Globals g;
    app.add_option("--seed", g.seed, "random seed echoed into every report");
    app.add_option("--cap", g.cap, "feasibility cap for primes and tau (default 1e8)");
    app.add_option("--workers", g.workers, "worker threads (0 = auto)");
    app.add_option("--out", g.out, "output path (default stdout)");
    app.add_option("--format", g.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--config", g.config_path, "JSON config file");
    app.add_option("--set", g.sets, "config override key=value (repeatable)");

    // shared parameter flags
    std::optional<int> fH;
    std::optional<long> fnu;
    std::optional<double> falpha, fdelta0, falpha_star, fcq;

    auto add_param_flags = [&](CLI::App* sub) {
        sub->add_option("--H", fH, "H in [2, 8]");
        sub->add_option("--nu", fnu, "nu >= 1");
        sub->add_option("--alpha", falpha, "alpha in (0, 1)");
        sub->add_option("--delta0", fdelta0, "secondary parameter delta0");
        sub->add_option("--alpha-star", falpha_star, "target alpha* (default alpha_bar)");
        sub->add_option("--cq", fcq, "chaining constant Cq");
    };

    auto* c_params = app.add_subcommand("params", "derive the parameter set, verify identities");
    add_param_flags(c_params);

    auto* c_sup = app.add_subcommand("sup", "certified supremum of a prime polynomial or family");
    bool sup_family = false;
    std::optional<double> s_n1, s_n2, s_theta, s_U, s_delta, s_Llo, s_Lhi, s_eps;
    c_sup->add_flag("--family", sup_family, "family supremum instead ofic a single certificate");
    c_sup->add_option("--n1", s_n1, "prime range start (certificate mode)");
    c_sup->add_option("--n2", s_n2, "prime range end (certificate mode)");
    c_sup->add_option("--theta", s_theta, "shift (family mode)");
    c_sup->add_option("--U", s_U, "family base U");
    c_sup->add_option("--delta", s_delta, "family exponent delta");
    c_sup->add_option("--L-lo", s_Llo, "interval L start");
    c_sup->add_option("--L-hi", s_Lhi, "interval L end");
    c_sup->add_option("--eps", s_eps, "target enclosure gap");

    auto* c_spacing = app.add_subcommand("spacing", "xi_phi(N, q) against the prime lower bound");
    std::optional<uint32_t> sp_n, sp_q;
    c_spacing->add_option("--max-N", sp_n, "largest N (default 6)");
    c_spacing->add_option("--max-q", sp_q, "largest q (default 3)");

    auto* c_moments = app.add_subcommand("moments", "2q-th moment bounds by quadrature");
    std::optional<uint32_t> m_n, m_q, m_draws;
    std::optional<double> m_jlen, m_T;
    c_moments->add_option("--N", m_n, "prime phases (default 4)");
    c_moments->add_option("--q", m_q, "moment order (default 2)");
    c_moments->add_option("--draws", m_draws, "random coefficient draws (default 5)");
    c_moments->add_option("--J-len", m_jlen, "length of J (default 100)");
    c_moments->add_option("--T", m_T, "corollary window half-length (default 100)");

    auto* c_hilbert = app.add_subcommand("hilbert", "randomized inequality suite");
    std::optional<uint32_t> h_trials, h_maxn;
    std::optional<double> h_gap;
    c_hilbert->add_option("--trials", h_trials, "instances (default 1000)");
    c_hilbert->add_option("--max-N", h_maxn, "largest instance size (default 50)");
    c_hilbert->add_option("--min-gap", h_gap, "lambda separation (default 1e-3)");

    auto* c_chain = app.add_subcommand("chain", "calibrate the chaining constant Cq");
    std::optional<uint32_t> ch_q, ch_trials;
    c_chain->add_option("--q", ch_q, "moment order (default 2)");
    c_chain->add_option("--trials", ch_trials, "suite size (default 50)");

    auto* c_theta = app.add_subcommand("theta", "estimate the good-theta measure");
    add_param_flags(c_theta);
    std::optional<uint64_t> t_samples;
    c_theta->add_option("--samples", t_samples, "theta samples (default 200)");

    auto* c_scan = app.add_subcommand("scan", "localization-criterion margin scan");
    add_param_flags(c_scan);
    std::optional<double> sc_theta;
    std::optional<uint32_t> sc_grid;
    c_scan->add_option("--theta", sc_theta, "shift theta (default: midpoint of J)");
    c_scan->add_option("--tau-grid", sc_grid, "tau grid points (default 21)");

    auto* c_cover = app.add_subcommand("cover", "covering subdivision counter");
    add_param_flags(c_cover);
    std::optional<uint32_t> cv_blocks, cv_ppb;
    c_cover->add_option("--blocks", cv_blocks, "synthetic good-set blocks (default 1)");
    c_cover->add_option("--points-per-block", cv_ppb, "samples per block (default 200000)");

    auto* c_zeta = app.add_subcommand("zeta", "independent zeta oracle");
    std::string z_mode = "em";
    std::optional<double> z_sigma, z_t, z_T, z_step, z_sigma0, z_tlo, z_thi;
    std::optional<uint32_t> z_grid, z_terms, z_order;
    c_zeta->add_option("--mode", z_mode, "em | count | box");
    c_zeta->add_option("--sigma", z_sigma, "real part (em mode, default 2)");
    c_zeta->add_option("--t", z_t, "imaginary part (em mode, default 0)");
    c_zeta->add_option("--T", z_T, "count mode height (default 100)");
    c_zeta->add_option("--step", z_step, "count mode grid step (default 0.01)");
    c_zeta->add_option("--sigma0", z_sigma0, "box mode left edge (default 0.9)");
    c_zeta->add_option("--t-lo", z_tlo, "box mode window start (default 10)");
    c_zeta->add_option("--t-hi", z_thi, "box mode window end (default 20)");
    c_zeta->add_option("--grid", z_grid, "box mode points per axis (default 16)");
    c_zeta->add_option("--terms", z_terms, "em mode direct terms (default 64)");
    c_zeta->add_option("--order", z_order, "em mode Bernoulli order (default 10)");

    auto* c_certify = app.add_subcommand("certify", "full pipeline at desk scale");
    add_param_flags(c_certify);
    std::optional<uint64_t> cf_samples;
    std::optional<uint32_t> cf_grid;
    c_certify->add_option("--samples", cf_samples, "theta samples (default 2000)");
    c_certify->add_option("--tau-grid", cf_grid, "scan tau points (default 11)");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        const json cfg = load_config(g);
        if (cfg.contains("seed") && !app.count("--seed")) g.seed = cfg["seed"].get<uint64_t>();
        if (cfg.contains("cap") && !app.count("--cap")) g.cap = cfg["cap"].get<double>();
        if (cfg.contains("workers") && !app.count("--workers"))
            g.workers = cfg["workers"].get<int>();

        auto make_params = [&](double default_alpha = 0.75, int default_H = 2,
                               long default_nu = 4) {
            DeriveOptions opts;
            const int H = resolve(fH, cfg, "H", default_H);
            const long nu = resolve(fnu, cfg, "nu", default_nu);
            const double alpha = resolve(falpha, cfg, "alpha", default_alpha);
            if (fdelta0 || cfg.contains("delta0"))
                opts.delta0 = resolve(fdelta0, cfg, "delta0", 0.0);
            if (falpha_star || cfg.contains("alpha_star"))
                opts.alpha_star = resolve(falpha_star, cfg, "alpha_star", 0.0);
            opts.cq = resolve(fcq, cfg, "cq", 1.0);
            return derive_params(H, nu, alpha, opts);
        };
        auto effective_params = [&](const ParameterSet& p) {
            return json{{"H", p.H},           {"nu", p.nu}, {"alpha", p.alpha},
                        {"delta0", p.delta0}, {"cq", p.cq}, {"alpha_star", p.alpha_star}};
        };

        if (*c_params) {
            const auto p = make_params();
            return run_params(g, p, effective_params(p));
        }
        if (*c_sup) {
            const double n1 = resolve(s_n1, cfg, "n1", 10.0);
            const double n2 = resolve(s_n2, cfg, "n2", 100.0);
            const double theta = resolve(s_theta, cfg, "theta", 0.0);
            const double U = resolve(s_U, cfg, "U", 100.0);
            const double delta = resolve(s_delta, cfg, "delta", 0.5);
            const Interval L{resolve(s_Llo, cfg, "L_lo", 0.0), resolve(s_Lhi, cfg, "L_hi", 1.0)};
            const double eps = resolve(s_eps, cfg, "eps", 1e-3);
            json eff{{"family", sup_family}, {"n1", n1},       {"n2", n2},     {"theta", theta},
                     {"U", U},               {"delta", delta}, {"L_lo", L.lo}, {"L_hi", L.hi},
                     {"eps", eps}};
            return run_sup(g, sup_family, n1, n2, theta, U, delta, L, eps, eff);
        }
        if (*c_spacing) {
            const uint32_t mn = resolve(sp_n, cfg, "max_N", 6u);
            const uint32_t mq = resolve(sp_q, cfg, "max_q", 3u);
            return run_spacing(g, mn, mq, json{{"max_N", mn}, {"max_q", mq}});
        }
        if (*c_moments) {
            const uint32_t N = resolve(m_n, cfg, "N", 4u);
            const uint32_t q = resolve(m_q, cfg, "q", 2u);
            const uint32_t draws = resolve(m_draws, cfg, "draws", 5u);
            const double jlen = resolve(m_jlen, cfg, "J_len", 100.0);
            const double T = resolve(m_T, cfg, "T", 100.0);
            return run_moments(
                g, N, q, draws, jlen, T,
                json{{"N", N}, {"q", q}, {"draws", draws}, {"J_len", jlen}, {"T", T}});
        }
        if (*c_hilbert) {
            const uint32_t trials = resolve(h_trials, cfg, "trials", 1000u);
            const uint32_t maxn = resolve(h_maxn, cfg, "max_N", 50u);
            const double gap = resolve(h_gap, cfg, "min_gap", 1e-3);
            return run_hilbert(g, trials, maxn, gap,
                               json{{"trials", trials}, {"max_N", maxn}, {"min_gap", gap}});
        }
        if (*c_chain) {
            const uint32_t q = resolve(ch_q, cfg, "q", 2u);
            const uint32_t trials = resolve(ch_trials, cfg, "trials", 50u);
            return run_chain(g, q, trials, json{{"q", q}, {"trials", trials}});
        }
        if (*c_theta) {
            const auto p = make_params();
            const uint64_t samples = resolve(t_samples, cfg, "samples", uint64_t(200));
            json eff = effective_params(p);
            eff["samples"] = samples;
            return run_theta(g, p, samples, eff);
        }
        if (*c_scan) {
            const auto p = make_params();
            const double theta = resolve(sc_theta, cfg, "theta", 0.5 * (p.J.lo + p.J.hi));
            const uint32_t grid = resolve(sc_grid, cfg, "tau_grid", 21u);
            json eff = effective_params(p);
            eff["theta"] = theta;
            eff["tau_grid"] = grid;
            return run_scan(g, p, theta, grid, eff);
        }
        if (*c_cover) {
            const auto p = make_params();
            const uint32_t blocks = resolve(cv_blocks, cfg, "blocks", 1u);
            const uint32_t ppb = resolve(cv_ppb, cfg, "points_per_block", 200000u);
            json eff = effective_params(p);
            eff["blocks"] = blocks;
            eff["points_per_block"] = ppb;
            return run_cover(g, p, blocks, ppb, eff);
        }
        if (*c_zeta) {
            const double sigma = resolve(z_sigma, cfg, "sigma", 2.0);
            const double tval = resolve(z_t, cfg, "t", 0.0);
            const double T = resolve(z_T, cfg, "T", 100.0);
            const double step = resolve(z_step, cfg, "step", 0.01);
            const double sigma0 = resolve(z_sigma0, cfg, "sigma0", 0.9);
            const Interval tiv{resolve(z_tlo, cfg, "t_lo", 10.0),
                               resolve(z_thi, cfg, "t_hi", 20.0)};
            const uint32_t grid = resolve(z_grid, cfg, "grid", 16u);
            const uint32_t terms = resolve(z_terms, cfg, "terms", 64u);
            const uint32_t order = resolve(z_order, cfg, "order", 10u);
            return run_zeta(g, z_mode, sigma, tval, T, step, sigma0, tiv, grid, terms, order,
                            json{{"mode", z_mode},
                                 {"sigma", sigma},
                                 {"t", tval},
                                 {"T", T},
                                 {"step", step},
                                 {"sigma0", sigma0},
                                 {"t_lo", tiv.lo},
                                 {"t_hi", tiv.hi},
                                 {"grid", grid},
                                 {"terms", terms},
                                 {"order", order}});
        }
        if (*c_certify) {
            const int H = resolve(fH, cfg, "H", 2);
            const long nu = resolve(fnu, cfg, "nu", 1L);
            const double alpha = resolve(falpha, cfg, "alpha", 0.75);
            const uint64_t samples = resolve(cf_samples, cfg, "samples", uint64_t(2000));
            const uint32_t grid = resolve(cf_grid, cfg, "tau_grid", 11u);
            return run_certify(g, H, nu, alpha, samples, grid,
                               json{{"H", H},
                                    {"nu", nu},
                                    {"alpha", alpha},
                                    {"samples", samples},
                                    {"tau_grid", grid}});
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const constraint_violation& e) {
        std::cerr << "constraint violation: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
