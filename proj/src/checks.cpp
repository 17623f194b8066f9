#include "selberg/checks.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "selberg/continuous.hpp"
#include "selberg/core.hpp"
#include "selberg/detkit.hpp"
#include "selberg/discrete.hpp"
#include "selberg/rng.hpp"

namespace selberg {

namespace {

using json = nlohmann::json;

const std::array<const char*, 5> kSuiteOrder{"core", "det", "discrete", "continuous",
                                             "proof-replay"};

const std::map<std::string, double>& tolerance_table() {
    static const std::map<std::string, double> table{
        {"core.theta_quasiperiodicity", 1e-12},
        {"core.gamma_shift", 1e-12},
        {"core.gamma_power_shift", 1e-12},
        {"core.gamma_reflection", 1e-12},
        {"core.factorial_splice", 1e-12},
        {"core.dedekind_symmetry", 1e-13},
        {"det.determinant_multiplicative", 1e-10},
        {"det.andreief", 1e-10},
        {"det.warnaar", 1e-9},
        {"det.warnaar_cross_identity", 1e-10},
        {"discrete.transformation", 1e-9},
        {"discrete.summation", 1e-9},
        {"discrete.degeneration", 1e-10},
        {"continuous.beta", 1e-8},
        {"continuous.selberg_tq", 1e-6},
        {"continuous.selberg_general", 1e-6},
        {"continuous.transformation_n1", 1e-8},
        {"continuous.transformation_n2", 1e-5},
        {"continuous.v_reflection", 1e-10},
        {"proof-replay.discrete_det_lhs", 1e-9},
        {"proof-replay.discrete_det_rhs", 1e-9},
        {"proof-replay.cauchy_binet", 1e-10},
        {"proof-replay.moment_entries", 1e-8},
        {"proof-replay.continuous_det", 1e-6},
    };
    return table;
}

struct CheckValue {
    std::vector<std::pair<std::string, cplx>> params;
    cplx lhs;
    cplx rhs;
};

struct Runner {
    const SuiteConfig& cfg;
    Nome nm;
    QuadOptions quad;
    std::vector<CheckReport> reports;

    double tolerance(const std::string& id) const {
        auto it = cfg.tol.find(id);
        if (it != cfg.tol.end()) return it->second;
        return default_tolerance(id);
    }

    template <typename Body>
    void check(const std::string& id, int instances, Body body) {
        for (int i = 0; i < instances; ++i) {
            CheckReport r;
            r.check_id = id;
            auto t0 = std::chrono::steady_clock::now();
            try {
                CheckValue v = body(seed_for(cfg.seed, id, static_cast<std::uint64_t>(i)), i);
                r.params = std::move(v.params);
                r.lhs = v.lhs;
                r.rhs = v.rhs;
                r.rel_residual = rel_residual(v.lhs, v.rhs);
                r.pass = r.rel_residual <= tolerance(id);
            } catch (const std::exception& e) {
                r.error = e.what();
                r.rel_residual = 1e300;
                r.pass = false;
            }
            auto t1 = std::chrono::steady_clock::now();
            r.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            reports.push_back(std::move(r));
        }
    }

    // --- core ---------------------------------------------------------

    cplx draw_z_with_margin(Rng& rng, double mlo, double mhi, bool away_from_gamma_poles) {
        for (int tries = 0; tries < 100; ++tries) {
            cplx z = rng.polar_draw(mlo, mhi);
            if (std::abs(theta(z, nm)) < 1e-3) continue;
            if (away_from_gamma_poles &&
                (gamma_pole_margin(z, nm) < 1e-3 || gamma_pole_margin(nm.p * nm.q / z, nm) < 1e-3))
                continue;
            return z;
        }
        throw sampling_error("core check: could not draw z away from poles/zeros");
    }

    void suite_core() {
        check("core.theta_quasiperiodicity", cfg.count, [&](std::uint64_t seed, int) {
            Rng rng(seed);
            cplx z = draw_z_with_margin(rng, 0.25, 2.0, false);
            return CheckValue{{{"z", z}}, theta(nm.p * z, nm), -theta(z, nm) / z};
        });
        check("core.gamma_shift", cfg.count, [&](std::uint64_t seed, int) {
            Rng rng(seed);
            cplx z = draw_z_with_margin(rng, 0.3, 0.9, true);
            return CheckValue{{{"z", z}}, elliptic_gamma(nm.q * z, nm),
                              theta(z, nm) * elliptic_gamma(z, nm)};
        });
        check("core.gamma_power_shift", cfg.count, [&](std::uint64_t seed, int i) {
            Rng rng(seed);
            long k = 1 + (i % 8);
            cplx z = draw_z_with_margin(rng, 0.3, 0.9, true);
            return CheckValue{{{"z", z}, {"k", cplx(static_cast<double>(k), 0.0)}},
                              elliptic_gamma(pow_int(nm.q, k) * z, nm),
                              shifted_factorial(z, k, nm) * elliptic_gamma(z, nm)};
        });
        check("core.gamma_reflection", cfg.count, [&](std::uint64_t seed, int) {
            Rng rng(seed);
            cplx z = draw_z_with_margin(rng, 0.3, 0.9, true);
            return CheckValue{{{"z", z}},
                              elliptic_gamma(z, nm) * elliptic_gamma(nm.p * nm.q / z, nm),
                              cplx(1.0)};
        });
        check("core.factorial_splice", cfg.count, [&](std::uint64_t seed, int i) {
            Rng rng(seed);
            long m = i % 9, k = (i / 2) % 9;
            cplx z = draw_z_with_margin(rng, 0.3, 1.2, false);
            return CheckValue{
                {{"z", z},
                 {"m", cplx(static_cast<double>(m), 0.0)},
                 {"k", cplx(static_cast<double>(k), 0.0)}},
                shifted_factorial(z, m + k, nm),
                shifted_factorial(z, m, nm) * shifted_factorial(z * pow_int(nm.q, m), k, nm)};
        });
        check("core.dedekind_symmetry", 1, [&](std::uint64_t, int) {
            Nome swapped(nm.q, nm.p, nm.cutoff, nm.max_terms);
            return CheckValue{{}, dedekind_constant(nm), dedekind_constant(swapped)};
        });
    }

    // --- det ----------------------------------------------------------

    void suite_det() {
        check("det.determinant_multiplicative", cfg.count, [&](std::uint64_t seed, int) {
            Rng rng(seed);
            const std::size_t n = 5;
            ComplexMatrix a(n), b(n), ab(n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    a(r, c) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
                    b(r, c) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
                }
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    cplx s(0.0);
                    for (std::size_t k = 0; k < n; ++k) s += a(r, k) * b(k, c);
                    ab(r, c) = s;
                }
            return CheckValue{{}, det(ab), det(a) * det(b)};
        });
        check("det.andreief", cfg.count, [&](std::uint64_t seed, int i) {
            Rng rng(seed);
            const long n = 1 + (i % 4);
            const long npts = 4 + (i % 5);
            std::vector<cplx> pts, wts;
            for (long x = 0; x < npts; ++x) {
                pts.push_back(rng.polar_draw(0.4, 1.3));
                wts.push_back(cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)));
            }
            DiscreteMeasure mu(pts, wts);
            std::vector<ScalarFn> fs, gs;
            Nome nome = nm;
            for (long j = 0; j < n; ++j) {
                if (j % 2 == 0) {
                    fs.push_back([j](cplx x) { return pow_int(x, j); });
                } else {
                    cplx aj = rng.polar_draw(0.3, 0.7);
                    fs.push_back([aj, nome](cplx x) { return theta(aj * x, nome); });
                }
                if (j % 2 == 1) {
                    gs.push_back([j](cplx x) { return pow_int(x, j); });
                } else {
                    cplx bj = rng.polar_draw(0.3, 0.7);
                    gs.push_back([bj, nome](cplx x) { return theta(bj * x, nome); });
                }
            }
            return CheckValue{{{"n", cplx(static_cast<double>(n), 0.0)}},
                              andreief_lhs(fs, gs, mu), andreief_rhs(fs, gs, mu)};
        });
        check("det.warnaar", cfg.count, [&](std::uint64_t seed, int i) {
            Rng rng(seed);
            const long n = 1 + (i % 5);
            cplx a = rng.polar_draw(0.3, 0.9), b = rng.polar_draw(0.3, 0.9);
            std::vector<cplx> zs;
            for (long k = 0; k < n; ++k) zs.push_back(rng.polar_draw(0.3, 0.9));
            CheckValue v;
            v.params = {{"a", a}, {"b", b}};
            for (long k = 0; k < n; ++k) v.params.emplace_back("z" + std::to_string(k + 1), zs[k]);
            v.lhs = warnaar_det_direct(a, b, zs, nm);
            v.rhs = warnaar_det_closed(a, b, zs, nm);
            return v;
        });
        check("det.warnaar_cross_identity", cfg.count, [&](std::uint64_t seed, int) {
            Rng rng(seed);
            const long n = 3;
            std::vector<cplx> zs;
            for (long k = 0; k < n; ++k) zs.push_back(rng.polar_draw(0.35, 0.9));
            cplx lhs(1.0), rhs(1.0);
            for (long j = 0; j < n; ++j)
                for (long k = j + 1; k < n; ++k) {
                    cplx cross = theta_pm(zs[k], zs[j], nm) / zs[k];
                    lhs *= cross * cross;
                    rhs *= gamma_pm_pm(nm.q, zs[j], zs[k], nm) /
                           gamma_pm_pm(cplx(1.0), zs[j], zs[k], nm);
                }
            return CheckValue{{{"z1", zs[0]}, {"z2", zs[1]}, {"z3", zs[2]}}, lhs, rhs};
        });
    }

    // --- discrete -----------------------------------------------------

    static std::vector<std::pair<std::string, cplx>> discrete_param_list(
        const DiscreteParams& dp) {
        std::vector<std::pair<std::string, cplx>> out{
            {"a", dp.a}, {"b", dp.b}, {"c", dp.c}, {"d", dp.d}, {"e", dp.e}};
        if (dp.kind == DiscreteKind::transformation) {
            out.emplace_back("f", dp.f);
            out.emplace_back("g", dp.g);
            out.emplace_back("lambda", dp.lambda);
        }
        out.emplace_back("N", cplx(static_cast<double>(dp.N), 0.0));
        out.emplace_back("n", cplx(static_cast<double>(dp.n), 0.0));
        return out;
    }

    void suite_discrete() {
        static constexpr std::array<std::pair<long, long>, 6> grid{
            {{1, 3}, {2, 4}, {3, 5}, {2, 5}, {1, 6}, {3, 6}}};
        check("discrete.transformation", cfg.count, [&](std::uint64_t seed, int i) {
            auto [n, N] = grid[i % grid.size()];
            DiscreteParams dp =
                sample_discrete_params(seed, n, N, DiscreteKind::transformation, nm);
            return CheckValue{discrete_param_list(dp), discrete_transformation_lhs(dp, nm),
                              discrete_transformation_rhs(dp, nm)};
        });
        check("discrete.summation", cfg.count, [&](std::uint64_t seed, int i) {
            auto [n, N] = grid[i % grid.size()];
            DiscreteParams dp = sample_discrete_params(seed, n, N, DiscreteKind::summation, nm);
            return CheckValue{discrete_param_list(dp), discrete_summation_lhs(dp, nm),
                              discrete_summation_rhs(dp, nm)};
        });
        check("discrete.degeneration", cfg.count, [&](std::uint64_t seed, int i) {
            static constexpr std::array<std::pair<long, long>, 3> dgrid{{{2, 4}, {3, 5}, {2, 6}}};
            auto [n, N] = dgrid[i % dgrid.size()];
            DiscreteParams dp = sample_discrete_degenerate(seed, n, N, nm);
            return CheckValue{discrete_param_list(dp),
                              discrete_transformation_rhs_minimal(dp, nm),
                              discrete_transformation_rhs(dp, nm)};
        });
    }

    // --- continuous ---------------------------------------------------

    static std::vector<std::pair<std::string, cplx>> continuous_param_list(
        const ContinuousParams& cp) {
        std::vector<std::pair<std::string, cplx>> out{{"t", cp.t}};
        for (std::size_t k = 0; k < cp.ts.size(); ++k)
            out.emplace_back("t" + std::to_string(k + 1), cp.ts[k]);
        for (std::size_t k = 0; k < cp.us.size(); ++k)
            out.emplace_back("u" + std::to_string(k + 1), cp.us[k]);
        if (cp.kind == ContinuousKind::transformation) out.emplace_back("v", cp.v);
        out.emplace_back("n", cplx(static_cast<double>(cp.n), 0.0));
        return out;
    }

    void suite_continuous() {
        check("continuous.beta", cfg.count, [&](std::uint64_t seed, int) {
            ContinuousParams cp =
                sample_continuous_params(seed, ContinuousKind::selberg, 1, TMode::tq, nm);
            return CheckValue{continuous_param_list(cp), beta_integral_lhs(cp, nm, quad),
                              beta_integral_rhs(cp, nm)};
        });
        check("continuous.selberg_tq", cfg.count, [&](std::uint64_t seed, int) {
            ContinuousParams cp =
                sample_continuous_params(seed, ContinuousKind::selberg, 2, TMode::tq, nm);
            return CheckValue{continuous_param_list(cp), selberg_integral_lhs(cp, nm, quad),
                              selberg_integral_rhs(cp, nm)};
        });
        check("continuous.selberg_general", cfg.count, [&](std::uint64_t seed, int) {
            ContinuousParams cp =
                sample_continuous_params(seed, ContinuousKind::selberg, 2, TMode::general, nm);
            return CheckValue{continuous_param_list(cp), selberg_integral_lhs(cp, nm, quad),
                              selberg_integral_rhs(cp, nm)};
        });
        check("continuous.transformation_n1", cfg.count, [&](std::uint64_t seed, int) {
            ContinuousParams cp =
                sample_continuous_params(seed, ContinuousKind::transformation, 1, TMode::tq, nm);
            return CheckValue{continuous_param_list(cp),
                              integral_transformation_lhs(cp, nm, quad),
                              integral_transformation_rhs(cp, nm, quad)};
        });
        check("continuous.transformation_n2", cfg.count, [&](std::uint64_t seed, int) {
            ContinuousParams cp =
                sample_continuous_params(seed, ContinuousKind::transformation, 2, TMode::tq, nm);
            return CheckValue{continuous_param_list(cp),
                              integral_transformation_lhs(cp, nm, quad),
                              integral_transformation_rhs(cp, nm, quad)};
        });
        check("continuous.v_reflection", cfg.count, [&](std::uint64_t seed, int) {
            ContinuousParams cp =
                sample_continuous_params(seed, ContinuousKind::transformation, 1, TMode::tq, nm);
            return CheckValue{continuous_param_list(cp),
                              integral_transformation_rhs(cp, nm, quad),
                              integral_transformation_rhs(cp.with_negated_v(), nm, quad)};
        });
    }

    // --- proof replay ---------------------------------------------------

    void suite_proof() {
        static constexpr std::array<std::pair<long, long>, 4> grid{
            {{2, 3}, {3, 4}, {2, 4}, {3, 5}}};
        check("proof-replay.discrete_det_lhs", cfg.count, [&](std::uint64_t seed, int i) {
            auto [n, N] = grid[i % grid.size()];
            DiscreteParams dp =
                sample_discrete_params(seed, n, N, DiscreteKind::transformation, nm);
            cplx d = det(discrete_moment_matrix(dp, nm));
            cplx expect = discrete_moment_prefactor(dp, nm) * discrete_transformation_lhs(dp, nm);
            return CheckValue{discrete_param_list(dp), d, expect};
        });
        check("proof-replay.discrete_det_rhs", cfg.count, [&](std::uint64_t seed, int i) {
            auto [n, N] = grid[i % grid.size()];
            DiscreteParams dp =
                sample_discrete_params(seed, n, N, DiscreteKind::transformation, nm);
            cplx d = det(discrete_moment_matrix(dp, nm));
            cplx expect = discrete_moment_prefactor(dp, nm) * discrete_transformation_rhs(dp, nm);
            return CheckValue{discrete_param_list(dp), d, expect};
        });
        check("proof-replay.cauchy_binet", cfg.count, [&](std::uint64_t seed, int i) {
            auto [n, N] = grid[i % grid.size()];
            DiscreteParams dp =
                sample_discrete_params(seed, n, N, DiscreteKind::transformation, nm);
            cplx d = det(discrete_moment_matrix(dp, nm));
            auto fs = discrete_moment_row_functions(dp, nm);
            auto gs = discrete_moment_column_functions(dp, nm);
            cplx expansion = andreief_rhs(fs, gs, discrete_moment_measure(dp, nm));
            return CheckValue{discrete_param_list(dp), d, expansion};
        });
        check("proof-replay.moment_entries", cfg.count, [&](std::uint64_t seed, int) {
            ContinuousParams cp =
                sample_continuous_params(seed, ContinuousKind::selberg, 2, TMode::tq, nm);
            ComplexMatrix by_quad =
                continuous_moment_matrix(cp, nm, MomentEntryMethod::quadrature, quad);
            ComplexMatrix closed =
                continuous_moment_matrix(cp, nm, MomentEntryMethod::closed_form, quad);
            // report the worst-agreeing entry
            cplx wl = by_quad(0, 0), wr = closed(0, 0);
            for (std::size_t r = 0; r < by_quad.dim(); ++r)
                for (std::size_t c = 0; c < by_quad.dim(); ++c)
                    if (rel_residual(by_quad(r, c), closed(r, c)) > rel_residual(wl, wr)) {
                        wl = by_quad(r, c);
                        wr = closed(r, c);
                    }
            return CheckValue{continuous_param_list(cp), wl, wr};
        });
        check("proof-replay.continuous_det", cfg.count, [&](std::uint64_t seed, int) {
            ContinuousParams cp =
                sample_continuous_params(seed, ContinuousKind::selberg, 2, TMode::tq, nm);
            auto [lhs, rhs] = determinant_identity_check(cp, nm, quad);
            return CheckValue{continuous_param_list(cp), lhs, rhs};
        });
    }

    void run() {
        for (const char* suite : kSuiteOrder) {
            if (std::find(cfg.suites.begin(), cfg.suites.end(), suite) == cfg.suites.end())
                continue;
            if (std::string_view(suite) == "core") suite_core();
            else if (std::string_view(suite) == "det") suite_det();
            else if (std::string_view(suite) == "discrete") suite_discrete();
            else if (std::string_view(suite) == "continuous") suite_continuous();
            else suite_proof();
        }
    }
};

void validate_config(const SuiteConfig& cfg) {
    for (const std::string& s : cfg.suites)
        if (std::find(kSuiteOrder.begin(), kSuiteOrder.end(), std::string_view(s)) ==
            kSuiteOrder.end())
            throw config_error("unknown suite: " + s);
    if (cfg.count < 1) throw config_error("count must be >= 1");
    if (!(cfg.p_mod >= 0.0) || cfg.p_mod >= 1.0 || !(cfg.q_mod >= 0.0) || cfg.q_mod >= 1.0)
        throw config_error("|p| and |q| must be < 1");
    for (const auto& [id, tol] : cfg.tol) {
        if (tolerance_table().find(id) == tolerance_table().end())
            throw config_error("tolerance override for unknown check id: " + id);
        if (!(tol > 0.0)) throw config_error("tolerances must be positive");
    }
    if (cfg.quad_cap_1d < 16 || cfg.quad_cap_2d < 16)
        throw config_error("quadrature caps must be >= 16");
    if (cfg.format != "text" && cfg.format != "json")
        throw config_error("format must be 'text' or 'json'");
}

}  // namespace

SuiteConfig default_config() {
    SuiteConfig cfg;
    cfg.suites = {"core", "det", "discrete", "continuous", "proof-replay"};
    return cfg;
}

double default_tolerance(const std::string& check_id) {
    auto it = tolerance_table().find(check_id);
    if (it == tolerance_table().end()) throw config_error("unknown check id: " + check_id);
    return it->second;
}

std::vector<CheckReport> run_suites(const SuiteConfig& config) {
    validate_config(config);
    Runner runner{config,
                  Nome(std::polar(config.p_mod, config.p_arg), std::polar(config.q_mod, config.q_arg)),
                  QuadOptions{},
                  {}};
    runner.quad.m_cap_1d = config.quad_cap_1d;
    runner.quad.m_cap_2d = config.quad_cap_2d;
    runner.run();
    return runner.reports;
}

namespace {

json cplx_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw config_error("expected [re, im] pair");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

std::string render_report(const std::vector<CheckReport>& reports, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const CheckReport& r : reports) {
            json jr;
            jr["check_id"] = r.check_id;
            json params = json::array();
            for (const auto& [name, value] : r.params)
                params.push_back(json{{"name", name}, {"value", cplx_to_json(value)}});
            jr["params"] = std::move(params);
            jr["lhs"] = cplx_to_json(r.lhs);
            jr["rhs"] = cplx_to_json(r.rhs);
            jr["rel_residual"] = r.rel_residual;
            jr["pass"] = r.pass;
            jr["runtime_ms"] = r.runtime_ms;
            if (!r.error.empty()) jr["error"] = r.error;
            arr.push_back(std::move(jr));
        }
        return arr.dump(2) + "\n";
    }
    if (format != "text") throw config_error("render_report: format must be 'text' or 'json'");

    std::ostringstream os;
    std::size_t passed = 0;
    for (const CheckReport& r : reports) {
        char line[160];
        if (r.error.empty()) {
            std::snprintf(line, sizeof line, "%s  %-36s residual %.3e  %9.2f ms",
                          r.pass ? "PASS" : "FAIL", r.check_id.c_str(), r.rel_residual,
                          r.runtime_ms);
            os << line << "\n";
        } else {
            std::snprintf(line, sizeof line, "%s  %-36s error: ", r.pass ? "PASS" : "FAIL",
                          r.check_id.c_str());
            os << line << r.error << "\n";
        }
        if (r.pass) ++passed;
    }
    os << "passed " << passed << "/" << reports.size() << "\n";
    return os.str();
}

std::vector<CheckReport> parse_report(const std::string& json_text) {
    json arr = json::parse(json_text);
    if (!arr.is_array()) throw config_error("report: expected a top-level array");
    std::vector<CheckReport> out;
    for (const json& jr : arr) {
        CheckReport r;
        r.check_id = jr.at("check_id").get<std::string>();
        for (const json& jp : jr.at("params"))
            r.params.emplace_back(jp.at("name").get<std::string>(),
                                  cplx_from_json(jp.at("value")));
        r.lhs = cplx_from_json(jr.at("lhs"));
        r.rhs = cplx_from_json(jr.at("rhs"));
        r.rel_residual = jr.at("rel_residual").get<double>();
        r.pass = jr.at("pass").get<bool>();
        r.runtime_ms = jr.at("runtime_ms").get<double>();
        if (jr.contains("error")) r.error = jr.at("error").get<std::string>();
        out.push_back(std::move(r));
    }
    return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const CheckReport& r) { return r.pass; });
}

void clear_runtimes(std::vector<CheckReport>& reports) {
    for (CheckReport& r : reports) r.runtime_ms = 0.0;
}

SuiteConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw config_error(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw config_error("config: expected a JSON object");
    SuiteConfig cfg = default_config();
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "suites") {
                cfg.suites = value.get<std::vector<std::string>>();
            } else if (key == "seed") {
                cfg.seed = value.get<std::uint64_t>();
            } else if (key == "count") {
                cfg.count = value.get<int>();
            } else if (key == "p") {
                cfg.p_mod = value.at(0).get<double>();
                cfg.p_arg = value.at(1).get<double>();
            } else if (key == "q") {
                cfg.q_mod = value.at(0).get<double>();
                cfg.q_arg = value.at(1).get<double>();
            } else if (key == "tol") {
                cfg.tol = value.get<std::map<std::string, double>>();
            } else if (key == "quad_cap_1d") {
                cfg.quad_cap_1d = value.get<int>();
            } else if (key == "quad_cap_2d") {
                cfg.quad_cap_2d = value.get<int>();
            } else if (key == "out") {
                cfg.out = value.get<std::string>();
            } else if (key == "format") {
                cfg.format = value.get<std::string>();
            } else if (key == "timings") {
                cfg.timings = value.get<bool>();
            } else {
                throw config_error("config: unknown field '" + key + "'");
            }
        } catch (const json::exception& e) {
            throw config_error("config: bad value for '" + key + "': " + e.what());
        }
    }
    // "all" expands to the full suite list
    if (cfg.suites.size() == 1 && cfg.suites[0] == "all") cfg.suites = default_config().suites;
    return cfg;
}

}  // namespace selberg
