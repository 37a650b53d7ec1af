// report.hpp
//
// Run configuration, machine-readable report envelopes, and the five
// command runners behind the CLI. Reports are JSON (schema 1) with every
// number serialized as a decimal string at full working precision, or CSV
// with one row per term. Identical config + zero table produce
// byte-identical JSON apart from the run_meta object (timestamp and wall
// time), which consumers strip before comparing.

#pragma once

#include "gbx/numeric.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gbx {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
    std::string command;                     // verify-t1 | verify-t2 | sweep-f |
                                             // regime-e | validate-forms
    std::string z_literal;                   // complex "a+bi" (verify-t1)
    long n = 0;                              // verify-t2
    std::string zeros_path;                  // empty: $GBX_ZEROS, then bundled
    int max_zeros = 2000;
    long prime_cutoff = 0;                   // 0 = sized from tolerance
    int bits = 0;                            // 0 = per-command default
    double quad_tol = 1e-10;
    std::string out_path;                    // empty = stdout
    std::string format = "json";             // json | csv
    std::vector<int> k_ladder;               // empty = {100, 500, max_zeros}
    std::string n_grid_spec = "50:5000:log"; // sweep-f
    std::vector<long> u_list = {10, 20, 50}; // validate-forms
    double a = 0.01;                         // regime-e
    std::string y_grid_spec = "0.001:100:log";

    void validate() const;
};

struct ReportEnvelope {
    ordered_json doc;
    bool ok = true;
};

// "a+bi" / "a-bi" / "a" / "bi" with decimal parts
std::pair<double, double> parse_complex_literal(const std::string& s);

// "lo:hi:log[:count]" / "lo:hi:lin[:count]" / "v1,v2,v3"
std::vector<double> parse_grid(const std::string& spec, int default_count = 9);

// corrections adopted after oracle validation (embedded in reports)
struct Correction {
    std::string term;
    std::string note;
};
const std::vector<Correction>& adopted_corrections();

// resolve the zero table path: explicit > $GBX_ZEROS > bundled
std::string resolve_zeros_path(const std::string& explicit_path);

ReportEnvelope run_verify_t1(const RunConfig& cfg);
ReportEnvelope run_verify_t2(const RunConfig& cfg);
ReportEnvelope run_sweep_f(const RunConfig& cfg);
ReportEnvelope run_regime_e(const RunConfig& cfg);
ReportEnvelope run_validate_forms(const RunConfig& cfg);

ReportEnvelope run_command(const RunConfig& cfg);

// serialize (JSON or per-term CSV) to cfg.out_path or stdout
void emit_report(const ReportEnvelope& rep, const RunConfig& cfg);
std::string report_to_csv(const ordered_json& doc);

} // namespace gbx
