#ifndef SELBERG_CHECKS_HPP
#define SELBERG_CHECKS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "selberg/numeric.hpp"

namespace selberg {

// Configuration of a verification run. JSON config files use exactly
// these field names; p and q are [modulus, phase] pairs.
struct SuiteConfig {
    std::vector<std::string> suites;  // subset of {core, det, discrete, continuous, proof-replay}
    std::uint64_t seed = 1;
    int count = 5;  // instances per check
    double p_mod = 0.20, p_arg = 0.3;
    double q_mod = 0.45, q_arg = 1.1;
    std::map<std::string, double> tol;  // per-check-id overrides
    int quad_cap_1d = 1024;
    int quad_cap_2d = 256;
    std::string out = "-";
    std::string format = "text";
    bool timings = false;  // include wall-clock runtimes in rendered reports
};

// All five suites, default everything else.
SuiteConfig default_config();

// Parse a JSON config file body; unknown fields are rejected.
SuiteConfig parse_config(const std::string& text);

// One verification record.
struct CheckReport {
    std::string check_id;
    std::vector<std::pair<std::string, cplx>> params;
    cplx lhs{0.0};
    cplx rhs{0.0};
    double rel_residual = 0.0;
    bool pass = false;
    double runtime_ms = 0.0;
    std::string error;  // nonempty when the check failed by exception

    bool operator==(const CheckReport&) const = default;
};

// Built-in tolerance for a check id (the value used when the config
// carries no override).
double default_tolerance(const std::string& check_id);

// Execute the configured suites. Deterministic for a fixed config up to
// runtime_ms; sampling/quadrature failures become failed reports, never
// exceptions. Report order is fixed by (suite, check, instance).
std::vector<CheckReport> run_suites(const SuiteConfig& config);

// "text": one aligned line per check plus a "passed K/M" summary.
// "json": array of objects with the CheckReport field names; complex
// values as [re, im] pairs.
std::string render_report(const std::vector<CheckReport>& reports, const std::string& format);

// Inverse of the JSON rendering.
std::vector<CheckReport> parse_report(const std::string& json_text);

bool all_passed(const std::vector<CheckReport>& reports);

// Zero out wall-clock fields so renderings are byte-identical across runs.
void clear_runtimes(std::vector<CheckReport>& reports);

}  // namespace selberg

#endif
