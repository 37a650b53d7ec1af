#include "gbx/report.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gbx {

void RunConfig::validate() const {
    static const char* cmds[] = {"verify-t1", "verify-t2", "sweep-f", "regime-e",
                                 "validate-forms"};
    bool known = false;
    for (const char* c : cmds) known = known || command == c;
    if (!known) throw parse_error("unknown command: " + command);
    if (max_zeros < 0) throw parse_error("max-zeros must be >= 0");
    if (bits != 0 && bits < 53) throw parse_error("precision bits must be >= 53");
    if (quad_tol <= 0) throw parse_error("quad tolerance must be positive");
    if (format != "json" && format != "csv")
        throw parse_error("format must be json or csv, got " + format);
}

std::pair<double, double> parse_complex_literal(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace((unsigned char)c)) s.push_back(c);
    if (s.empty()) throw parse_error("empty complex literal");
    // locate the sign splitting real and imaginary parts: a '+'/'-' that is
    // not leading and not part of an exponent
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            split = i;  // keep the last one
    }
    const auto to_num = [&](const std::string& part) -> double {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        char* endp = nullptr;
        const double v = std::strtod(part.c_str(), &endp);
        if (endp != part.c_str() + part.size())
            throw parse_error("bad number in complex literal: '" + part + "'");
        return v;
    };
    if (s.back() == 'i' || s.back() == 'I') {
        const std::string body = s.substr(0, s.size() - 1);
        if (split == std::string::npos) return {0.0, to_num(body)};  // pure imaginary
        return {to_num(body.substr(0, split)), to_num(body.substr(split))};
    }
    if (split != std::string::npos && s.find('i') != std::string::npos)
        throw parse_error("malformed complex literal: " + raw);
    return {to_num(s), 0.0};
}

std::vector<double> parse_grid(const std::string& spec, int default_count) {
    std::vector<double> out;
    if (spec.find(':') == std::string::npos) {
        std::stringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) out.push_back(std::stod(tok));
        if (out.empty()) throw parse_error("empty grid spec");
        return out;
    }
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.size() < 3) throw parse_error("grid spec must be lo:hi:log|lin[:count]");
    const double lo = std::stod(parts[0]);
    const double hi = std::stod(parts[1]);
    const bool logspace = parts[2] == "log";
    if (!logspace && parts[2] != "lin")
        throw parse_error("grid spacing must be 'log' or 'lin'");
    const int count = parts.size() > 3 ? std::stoi(parts[3]) : default_count;
    if (count < 2 || !(hi > lo)) throw parse_error("bad grid bounds/count");
    if (logspace && !(lo > 0)) throw parse_error("log grid needs lo > 0");
    for (int i = 0; i < count; ++i) {
        const double t = (double)i / (count - 1);
        out.push_back(logspace ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t);
    }
    return out;
}

const std::vector<Correction>& adopted_corrections() {
    static const std::vector<Correction> cs = {
        {"compensator",
         "zero-sum compensator is 2^rho e^{-2z}/rho; the e^{-z} variant printed in "
         "the reference statement stalls K-refinement"},
        {"H1", "overall sign of the integrated-by-parts line flipped in the reference"},
        {"H2", "overall sign flipped and rho vs rho+1 exponents mixed in the reference"},
        {"H3", "overall sign of the integrated-by-parts line flipped in the reference"},
        {"V4", "reference closed form disagrees with its defining integral; replaced "
               "by the dilog primitive form"},
        {"ei-asymptotic",
         "large-argument expansion is Ei(w) ~ i pi sgn(Im w) + e^w/w (1 + 1!/w + ...); "
         "the reference prints -e^w/w, which fails the remainder bound"},
    };
    return cs;
}

std::string resolve_zeros_path(const std::string& explicit_path) {
    if (!explicit_path.empty()) return explicit_path;
    if (const char* env = std::getenv("GBX_ZEROS"); env && *env) return env;
#ifdef GBX_BUNDLED_ZEROS
    return GBX_BUNDLED_ZEROS;
#else
    throw parse_error("no zero table: pass --zeros or set GBX_ZEROS");
#endif
}

namespace {

void flatten_csv(const ordered_json& node, const std::string& prefix, std::string& out) {
    if (node.is_object()) {
        for (const auto& [k, v] : node.items())
            flatten_csv(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& v : node) flatten_csv(v, prefix + "[" + std::to_string(i++) + "]", out);
    } else {
        out += prefix;
        out += ',';
        if (node.is_string()) out += node.get<std::string>();
        else out += node.dump();
        out += '\n';
    }
}

} // namespace

std::string report_to_csv(const ordered_json& doc) {
    std::string out = "key,value\n";
    flatten_csv(doc, "", out);
    return out;
}

void emit_report(const ReportEnvelope& rep, const RunConfig& cfg) {
    const std::string text =
        cfg.format == "csv" ? report_to_csv(rep.doc) : rep.doc.dump(2) + "\n";
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out_path);
        if (!f) throw parse_error("cannot open output path: " + cfg.out_path);
        f << text;
    }
}

ReportEnvelope run_command(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.command == "verify-t1") return run_verify_t1(cfg);
    if (cfg.command == "verify-t2") return run_verify_t2(cfg);
    if (cfg.command == "sweep-f") return run_sweep_f(cfg);
    if (cfg.command == "regime-e") return run_regime_e(cfg);
    return run_validate_forms(cfg);
}

} // namespace gbx
