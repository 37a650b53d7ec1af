// runner.cpp
//
// The five CLI command runners. Each builds an ordered_json report
// (schema 1, numbers as decimal strings) and asserts the run's invariants;
// the process exit status is derived from ReportEnvelope::ok.

#include "gbx/closed_forms.hpp"
#include "gbx/number_theory.hpp"
#include "gbx/report.hpp"
#include "gbx/theorem1.hpp"
#include "gbx/theorem2.hpp"

#include <chrono>
#include <ctime>

namespace gbx {

namespace {

using clock_type = std::chrono::steady_clock;

ordered_json config_echo(const RunConfig& cfg) {
    ordered_json j;
    j["command"] = cfg.command;
    if (!cfg.z_literal.empty()) j["z"] = cfg.z_literal;
    if (cfg.n) j["n"] = cfg.n;
    j["zeros"] = resolve_zeros_path(cfg.zeros_path);
    j["max_zeros"] = cfg.max_zeros;
    if (cfg.prime_cutoff) j["prime_cutoff"] = cfg.prime_cutoff;
    j["bits"] = cfg.bits;
    j["quad_tol"] = cfg.quad_tol;
    j["format"] = cfg.format;
    return j;
}

void finish(ordered_json& doc, const clock_type::time_point& t0, bool ok) {
    doc["ok"] = ok;
    ordered_json meta;
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    meta["timestamp"] = buf;
    meta["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - t0).count();
    doc["run_meta"] = meta;
}

std::vector<int> make_ladder(const RunConfig& cfg, int K) {
    std::vector<int> ladder = cfg.k_ladder;
    if (ladder.empty()) ladder = {100, 500, 2000};
    std::vector<int> out;
    for (int k : ladder)
        if (k <= K && k > 0) out.push_back(k);
    if (out.empty() || out.back() != K) out.push_back(K);
    return out;
}

// residual ladder is monotone within a factor of 1.5 per step and the last
// rung improves on the first
template <class R> bool ladder_monotone(const std::vector<std::pair<int, R>>& trace) {
    for (std::size_t i = 1; i < trace.size(); ++i)
        if (!(trace[i].second <= trace[i - 1].second * R(1.5))) return false;
    return trace.empty() || trace.back().second <= trace.front().second;
}

ordered_json corrections_json() {
    ordered_json arr = ordered_json::array();
    for (const auto& c : adopted_corrections()) {
        ordered_json e;
        e["term"] = c.term;
        e["note"] = c.note;
        arr.push_back(e);
    }
    return arr;
}

template <class R> ordered_json cplx_json(const complex_t<R>& z) {
    ordered_json j;
    j["re"] = to_decimal_string(creal(z));
    j["im"] = to_decimal_string(cimag(z));
    return j;
}

// ---------------------------------------------------------------------------

template <class R> ReportEnvelope verify_t1_impl(const RunConfig& cfg, int bits) {
    using C = complex_t<R>;
    const auto t0 = clock_type::now();
    const auto [zre, zim] = parse_complex_literal(cfg.z_literal);
    if (!(zre > 0)) throw domain_error("verify-t1: Re(z) must be > 0");
    const C z{R(zre), R(zim)};
    const bool real_z = zim == 0.0;

    ZeroTable table = load_zeros_file(resolve_zeros_path(cfg.zeros_path));
    if ((std::size_t)cfg.max_zeros > table.size())
        throw domain_error("verify-t1: max-zeros exceeds table size");
    const int K = cfg.max_zeros;

    TruncationPolicy pol;
    pol.zero_count = K;
    pol.quad_tolerance = cfg.quad_tol;
    pol.precision = PrecisionContext::for_bits(bits);
    pol.dirichlet_cutoff = cfg.prime_cutoff;

    const double stol = std::min(cfg.quad_tol, 1e-3) * 1e-2;
    const long M = cfg.prime_cutoff ? cfg.prime_cutoff
                                    : choose_dirichlet_cutoff(R(zre), stol, 2000000);
    LambdaSieve sieve((std::uint32_t)M);

    const auto ladder = make_ladder(cfg, K);
    const auto trace = theorem1_refinement<R>(z, table, pol, ladder, sieve);
    pol.zero_count = K;
    const auto rep = theorem1_rhs<R>(z, table, pol, sieve);

    ordered_json doc;
    doc["schema"] = 1;
    doc["config"] = config_echo(cfg);
    doc["config"]["bits"] = bits;
    ordered_json terms;
    for (const auto& [name, val] : rep.terms) terms[name] = cplx_json<R>(val);
    doc["terms"] = terms;
    doc["lhs"] = cplx_json<R>(rep.lhs_direct);
    doc["rhs"] = cplx_json<R>(rep.rhs_total);
    doc["residual"] = to_decimal_string(rep.residual);
    doc["dirichlet_cutoff"] = rep.dirichlet_cutoff;
    doc["dirichlet_tail_bound"] = to_decimal_string(rep.dirichlet_tail_bound);
    ordered_json refine = ordered_json::array();
    for (const auto& [k, r] : trace) {
        ordered_json row;
        row["K"] = k;
        row["residual"] = to_decimal_string(r);
        refine.push_back(row);
    }
    doc["refinement"] = refine;
    doc["corrections"] = corrections_json();

    ordered_json inv;
    bool ok = true;
    const bool mono = ladder_monotone(trace);
    inv["ladder_monotone"] = mono;
    ok = ok && mono;
    if (real_z) {
        const bool real_ok =
            cabs(C(C(R(0), cimag(rep.rhs_total)))) <= R(1e-10) * cabs(rep.rhs_total) &&
            cabs(C(C(R(0), cimag(rep.lhs_direct)))) <= R(1e-10) * cabs(rep.rhs_total);
        inv["reality"] = real_ok;
        ok = ok && real_ok;
    } else {
        // conjugation run: theorem1Rhs(conj z) must equal conj(theorem1Rhs(z))
        const auto rep_c = theorem1_rhs<R>(cconj(z), table, pol, sieve);
        const bool conj_ok = creal(rep_c.rhs_total) == creal(rep.rhs_total) &&
                             cimag(rep_c.rhs_total) == -cimag(rep.rhs_total);
        inv["conjugation"] = conj_ok;
        ok = ok && conj_ok;
    }
    const bool terms_sum_ok = [&] {
        kahan_cplx_sum<R> s;
        for (const auto& [name, val] : rep.terms) s.add(val);
        return cabs(C(s.template value_as<C>() - rep.rhs_total)) <=
               std::numeric_limits<R>::epsilon() * 8 * cabs(rep.rhs_total);
    }();
    inv["terms_sum_to_total"] = terms_sum_ok;
    ok = ok && terms_sum_ok;
    doc["invariants"] = inv;

    finish(doc, t0, ok);
    return {doc, ok};
}

template <class R> ReportEnvelope verify_t2_impl(const RunConfig& cfg, int bits) {
    const auto t0 = clock_type::now();
    if (cfg.n <= 4) throw domain_error("verify-t2: N must be > 4");
    ZeroTable table = load_zeros_file(resolve_zeros_path(cfg.zeros_path));
    if ((std::size_t)cfg.max_zeros > table.size())
        throw domain_error("verify-t2: max-zeros exceeds table size");
    const int K = cfg.max_zeros;

    TruncationPolicy pol;
    pol.zero_count = K;
    pol.quad_tolerance = cfg.quad_tol;
    pol.precision = PrecisionContext::for_bits(bits);

    LambdaSieve sieve((std::uint32_t)std::max<long>(cfg.n, 600));
    const double lhs = cesaro_lhs(sieve, (std::uint32_t)cfg.n);
    const double lhs_conv = psi_convolution_oracle(sieve, (std::uint32_t)cfg.n);

    const auto ladder = make_ladder(cfg, K);
    std::vector<std::pair<int, R>> trace;
    CesaroDecomposition<R> dec;
    for (int k : ladder) {
        pol.zero_count = k;
        dec = theorem2_rhs<R>(cfg.n, table, pol);
        using std::abs;
        trace.emplace_back(k, R(abs(R(lhs) - dec.rhs_total)));
    }

    ordered_json doc;
    doc["schema"] = 1;
    doc["config"] = config_echo(cfg);
    doc["config"]["bits"] = bits;
    ordered_json terms;
    for (int m = 1; m <= 10; ++m)
        terms["s" + std::to_string(m)] = to_decimal_string(dec.s[(std::size_t)m]);
    terms["H1"] = to_decimal_string(dec.h.h1);
    terms["H2"] = to_decimal_string(dec.h.h2);
    terms["H3"] = to_decimal_string(dec.h.h3);
    for (int m = 1; m <= 9; ++m)
        terms["V" + std::to_string(m)] = to_decimal_string(dec.v[(std::size_t)(m - 1)]);
    terms["mainTerm"] = to_decimal_string(dec.main_term);
    terms["singleZeroSum"] = to_decimal_string(dec.single_zero_sum);
    terms["doubleGammaSum"] = to_decimal_string(dec.double_gamma);
    terms["doubleBetaSum"] = to_decimal_string(dec.double_beta);
    terms["fOfN"] = to_decimal_string(dec.f_of_n);
    doc["terms"] = terms;
    doc["beta_mode"] = dec.beta_mode;
    doc["lhs"] = to_decimal_string(lhs);
    doc["lhs_psi_convolution"] = to_decimal_string(lhs_conv);
    doc["rhs"] = to_decimal_string(dec.rhs_total);
    using std::abs;
    doc["residual"] = to_decimal_string(real_cast<double>(R(abs(R(lhs) - dec.rhs_total))));
    ordered_json refine = ordered_json::array();
    for (const auto& [k, r] : trace) {
        ordered_json row;
        row["K"] = k;
        row["residual"] = to_decimal_string(r);
        refine.push_back(row);
    }
    doc["refinement"] = refine;
    doc["corrections"] = corrections_json();

    const auto lz = langzac_k1_crosscheck<R>(cfg.n, table, pol);
    ordered_json lzj;
    lzj["single_sum_difference"] = to_decimal_string(lz.difference);
    lzj["difference_over_n2"] = to_decimal_string(lz.difference_over_n2);
    doc["langzac_k1"] = lzj;

    ordered_json inv;
    bool ok = true;
    const bool lhs_ok = std::abs(lhs - lhs_conv) <= 1e-10 * std::max(1.0, lhs);
    inv["lhs_routes_agree"] = lhs_ok;
    ok = ok && lhs_ok;
    using std::max;
    const bool regroup_ok =
        abs(dec.s_total - dec.rhs_total) <= R(1e-12) * max(R(1), R(abs(dec.rhs_total)));
    inv["regrouping_identity"] = regroup_ok;
    ok = ok && regroup_ok;
    const bool mono = ladder_monotone(trace);
    inv["ladder_monotone"] = mono;
    ok = ok && mono;
    doc["invariants"] = inv;

    finish(doc, t0, ok);
    return {doc, ok};
}

} // namespace

ReportEnvelope run_verify_t1(const RunConfig& cfg) {
    const int bits = tier_bits(cfg.bits ? cfg.bits : 128);
    if (bits == 53) return verify_t1_impl<real53>(cfg, bits);
    if (bits == 128) return verify_t1_impl<real128>(cfg, bits);
    return verify_t1_impl<real256>(cfg, bits);
}

ReportEnvelope run_verify_t2(const RunConfig& cfg) {
    const int bits = tier_bits(cfg.bits ? cfg.bits : 53);
    if (bits == 53) return verify_t2_impl<real53>(cfg, bits);
    if (bits == 128) return verify_t2_impl<real128>(cfg, bits);
    return verify_t2_impl<real256>(cfg, bits);
}

ReportEnvelope run_sweep_f(const RunConfig& cfg) {
    const auto t0 = clock_type::now();
    ZeroTable table = load_zeros_file(resolve_zeros_path(cfg.zeros_path));
    const int K = std::min<int>(cfg.max_zeros, (int)table.size());
    TruncationPolicy pol;
    pol.zero_count = K;
    pol.quad_tolerance = cfg.quad_tol;
    pol.precision = PrecisionContext::for_bits(53);

    std::vector<long> grid;
    for (double v : parse_grid(cfg.n_grid_spec, 5)) {
        const long n = std::lround(v);
        if (n > 4 && (grid.empty() || n != grid.back())) grid.push_back(n);
    }
    const auto rows = f_of_n_sweep<double>(grid, table, pol);

    ordered_json doc;
    doc["schema"] = 1;
    doc["config"] = config_echo(cfg);
    doc["config"]["n_grid"] = cfg.n_grid_spec;
    ordered_json arr = ordered_json::array();
    bool decreasing = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        ordered_json row;
        row["N"] = r.N;
        row["F"] = to_decimal_string(r.f);
        row["F_over_N2"] = to_decimal_string(r.f_over_n2);
        row["F_over_N3"] = to_decimal_string(r.f_over_n3);
        arr.push_back(row);
        if (i > 0) decreasing = decreasing && std::abs(r.f_over_n3) <
                                                  std::abs(rows[i - 1].f_over_n3);
    }
    doc["sweep"] = arr;
    ordered_json inv;
    inv["f_over_n3_strictly_decreasing"] = decreasing;
    doc["invariants"] = inv;
    finish(doc, t0, decreasing);
    return {doc, decreasing};
}

ReportEnvelope run_regime_e(const RunConfig& cfg) {
    const auto t0 = clock_type::now();
    ZeroTable table = load_zeros_file(resolve_zeros_path(cfg.zeros_path));
    const int K = std::min<int>(cfg.max_zeros, (int)table.size());
    TruncationPolicy pol;
    pol.zero_count = K;
    pol.quad_tolerance = cfg.quad_tol;
    pol.precision = PrecisionContext::for_bits(53);

    const double a = cfg.a;
    std::vector<double> ys{0.0, a / 2, a};
    for (double y : parse_grid(cfg.y_grid_spec, 13)) ys.push_back(y);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    const double stol = 1e-12;
    const long M = choose_dirichlet_cutoff(a, stol, 2000000);
    LambdaSieve sieve((std::uint32_t)M);

    const auto rep = error_regime_check<double>({a}, ys, table, pol, sieve);

    ordered_json doc;
    doc["schema"] = 1;
    doc["config"] = config_echo(cfg);
    doc["config"]["a"] = to_decimal_string(a);
    doc["config"]["y_grid"] = cfg.y_grid_spec;
    ordered_json arr = ordered_json::array();
    for (const auto& pt : rep.points) {
        ordered_json row;
        row["y"] = to_decimal_string(pt.y);
        row["regime"] = pt.regime;
        row["abs_E"] = to_decimal_string(pt.abs_e);
        row["bound"] = to_decimal_string(pt.bound);
        row["ratio"] = to_decimal_string(pt.ratio);
        row["zero_sum_tail"] = to_decimal_string(pt.zero_sum_tail);
        row["converged"] = pt.converged;
        row["flagged"] = pt.flagged;
        arr.push_back(row);
    }
    doc["points"] = arr;
    doc["fitted_constant"] = to_decimal_string(rep.fitted_constant);
    doc["slack"] = to_decimal_string(rep.slack);
    ordered_json inv;
    inv["no_gross_violation"] = !rep.any_flagged;
    doc["invariants"] = inv;
    finish(doc, t0, !rep.any_flagged);
    return {doc, !rep.any_flagged};
}

ReportEnvelope run_validate_forms(const RunConfig& cfg) {
    const auto t0 = clock_type::now();
    ZeroTable table = load_zeros_file(resolve_zeros_path(cfg.zeros_path));
    TruncationPolicy pol;
    pol.zero_count = std::min<int>(cfg.max_zeros, (int)table.size());
    pol.quad_tolerance = std::min(cfg.quad_tol, 1e-9);
    pol.precision = PrecisionContext::for_bits(128);
    const int K_oracle = std::min(50, pol.zero_count);

    const auto val = validate_closed_forms(cfg.u_list, table, K_oracle, pol);

    ordered_json doc;
    doc["schema"] = 1;
    doc["config"] = config_echo(cfg);
    {
        ordered_json ul = ordered_json::array();
        for (long u : cfg.u_list) ul.push_back(u);
        doc["config"]["u_list"] = ul;
        doc["config"]["oracle_zeros"] = K_oracle;
    }
    ordered_json arr = ordered_json::array();
    for (const auto& st : val.statuses) {
        ordered_json row;
        row["term"] = st.term;
        row["u"] = st.u;
        if (st.printed_value) row["reference_value"] = to_decimal_string(*st.printed_value);
        row["engine_value"] = to_decimal_string(st.engine_value);
        row["oracle_value"] = to_decimal_string(st.oracle_value);
        if (st.printed_value)
            row["reference_rel_gap"] = to_decimal_string(st.printed_rel_gap);
        row["engine_rel_gap"] = to_decimal_string(st.engine_rel_gap);
        row["corrected"] = st.corrected;
        if (!st.note.empty()) row["note"] = st.note;
        arr.push_back(row);
    }
    doc["forms"] = arr;
    doc["corrections"] = corrections_json();
    ordered_json inv;
    inv["engine_matches_oracle"] = val.engine_ok;
    doc["invariants"] = inv;
    finish(doc, t0, val.engine_ok);
    return {doc, val.engine_ok};
}

} // namespace gbx
