// gbx.cpp
//
// Command-line driver for the explicit-formula verification engines.
//
//   gbx verify-t1 --z 0.1 --max-zeros 2000
//   gbx verify-t2 --n 50 --max-zeros 2000 --format csv
//   gbx sweep-f --n-grid 50:5000:log
//   gbx regime-e --a 0.01 --y-grid 0.001:100:log
//   gbx validate-forms --u 10,20,50
//
// Exit status: 0 all asserted invariants passed, 1 an invariant failed,
// 2 bad usage or parse error, 3 numerical/domain failure.

#include "gbx/report.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"explicit-formula verification engine for prime power series "
                 "and Cesaro-weighted Goldbach sums"};
    app.require_subcommand(1);

    gbx::RunConfig cfg;
    std::string ladder_spec;
    std::string u_spec;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--zeros", cfg.zeros_path,
                        "zero table path (default: $GBX_ZEROS, then bundled)");
        sub->add_option("--max-zeros", cfg.max_zeros, "number of zero pairs K");
        sub->add_option("--bits", cfg.bits,
                        "working precision significand bits (53/128/256)");
        sub->add_option("--quad-tol", cfg.quad_tol, "quadrature tolerance");
        sub->add_option("--prime-cutoff", cfg.prime_cutoff,
                        "Dirichlet-series cutoff M (0 = from tolerance)");
        sub->add_option("--k-ladder", ladder_spec,
                        "comma list of refinement K values (default 100,500,K)");
        sub->add_option("--out", cfg.out_path, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "json | csv");
    };

    auto* t1 = app.add_subcommand("verify-t1", "verify the prime power series identity");
    t1->add_option("--z", cfg.z_literal, "complex z with Re(z) > 0, e.g. 0.05+0.3i")
        ->required();
    add_common(t1);

    auto* t2 = app.add_subcommand("verify-t2", "verify the Cesaro-weighted Goldbach identity");
    t2->add_option("--n", cfg.n, "integer N > 4")->required();
    add_common(t2);

    auto* sf = app.add_subcommand("sweep-f", "sweep F(N)/N^2 over an N grid");
    sf->add_option("--n-grid", cfg.n_grid_spec, "grid spec lo:hi:log[:count] or list");
    add_common(sf);

    auto* re = app.add_subcommand("regime-e", "error-term regime check for E(a,y)");
    re->add_option("--a", cfg.a, "fixed a > 0");
    re->add_option("--y-grid", cfg.y_grid_spec, "y grid spec");
    add_common(re);

    auto* vf = app.add_subcommand("validate-forms", "closed forms vs quadrature oracles");
    vf->add_option("--u", u_spec, "comma list of u values (default 10,20,50)");
    add_common(vf);

    CLI11_PARSE(app, argc, argv);
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (!ladder_spec.empty()) {
            cfg.k_ladder.clear();
            for (double v : gbx::parse_grid(ladder_spec)) cfg.k_ladder.push_back((int)v);
        }
        if (!u_spec.empty()) {
            cfg.u_list.clear();
            for (double v : gbx::parse_grid(u_spec)) cfg.u_list.push_back(std::lround(v));
        }
        const gbx::ReportEnvelope rep = gbx::run_command(cfg);
        gbx::emit_report(rep, cfg);
        return rep.ok ? 0 : 1;
    } catch (const gbx::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gbx::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
