// Verification driver: samples parameters, runs the identity suites, and
// writes text or JSON reports. Exit codes: 0 all checks passed, 1 some
// check failed, 2 configuration or I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "selberg/checks.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw selberg::config_error("cannot read config file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"numerical verification of elliptic Selberg identities"};

    std::string config_path;
    std::vector<std::string> suites;
    std::vector<std::string> tol_overrides;
    std::uint64_t seed = 0;
    bool seed_set = false, count_set = false, out_set = false, format_set = false;
    bool pmod_set = false, parg_set = false, qmod_set = false, qarg_set = false;
    bool cap_set = false, timings = false;
    int count = 0, quad_cap = 0;
    double p_mod = 0, p_arg = 0, q_mod = 0, q_arg = 0;
    std::string out, format;

    app.add_option("config", config_path, "JSON config file (flags override its values)");
    app.add_option("--suite", suites,
                   "suite to run: core, det, discrete, continuous, proof-replay, or all "
                   "(repeatable)");
    app.add_option("--seed", seed, "base seed for all parameter draws")
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--count", count, "instances per check")
        ->each([&](const std::string&) { count_set = true; });
    app.add_option("--p-mod", p_mod, "modulus of p")
        ->each([&](const std::string&) { pmod_set = true; });
    app.add_option("--p-arg", p_arg, "phase of p (radians)")
        ->each([&](const std::string&) { parg_set = true; });
    app.add_option("--q-mod", q_mod, "modulus of q")
        ->each([&](const std::string&) { qmod_set = true; });
    app.add_option("--q-arg", q_arg, "phase of q (radians)")
        ->each([&](const std::string&) { qarg_set = true; });
    app.add_option("--tol", tol_overrides, "tolerance override <check_id>=<value> (repeatable)");
    app.add_option("--quad-cap", quad_cap,
                   "node cap per dimension for one-dimensional quadrature")
        ->each([&](const std::string&) { cap_set = true; });
    app.add_option("--out", out, "output path, or - for stdout")
        ->each([&](const std::string&) { out_set = true; });
    app.add_option("--format", format, "report format: text or json")
        ->each([&](const std::string&) { format_set = true; });
    app.add_flag("--timings", timings, "include wall-clock runtimes in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    selberg::SuiteConfig cfg = selberg::default_config();
    if (!config_path.empty()) cfg = selberg::parse_config(read_file(config_path));

    if (!suites.empty()) {
        cfg.suites = suites;
        if (cfg.suites.size() == 1 && cfg.suites[0] == "all")
            cfg.suites = selberg::default_config().suites;
    }
    if (seed_set) cfg.seed = seed;
    if (count_set) cfg.count = count;
    if (pmod_set) cfg.p_mod = p_mod;
    if (parg_set) cfg.p_arg = p_arg;
    if (qmod_set) cfg.q_mod = q_mod;
    if (qarg_set) cfg.q_arg = q_arg;
    if (cap_set) cfg.quad_cap_1d = quad_cap;
    if (out_set) cfg.out = out;
    if (format_set) cfg.format = format;
    if (timings) cfg.timings = true;
    for (const std::string& ov : tol_overrides) {
        auto eq = ov.find('=');
        if (eq == std::string::npos)
            throw selberg::config_error("--tol expects <check_id>=<value>: " + ov);
        try {
            cfg.tol[ov.substr(0, eq)] = std::stod(ov.substr(eq + 1));
        } catch (const std::exception&) {
            throw selberg::config_error("--tol: bad value in '" + ov + "'");
        }
    }

    std::vector<selberg::CheckReport> reports = selberg::run_suites(cfg);
    if (!cfg.timings) selberg::clear_runtimes(reports);
    std::string body = selberg::render_report(reports, cfg.format);

    if (cfg.out == "-") {
        std::cout << body;
    } else {
        std::ofstream of(cfg.out, std::ios::binary);
        if (!of) throw selberg::config_error("cannot open output path: " + cfg.out);
        of << body;
        if (!of.good()) throw selberg::config_error("write failed: " + cfg.out);
    }
    return selberg::all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const selberg::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
