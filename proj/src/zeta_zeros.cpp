#include "gbx/zeta_zeros.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace gbx {

ZeroTable ZeroTable::from_stream(std::istream& in, const std::string& source) {
    ZeroTable t;
    t.source_ = source;
    std::string line;
    long lineno = 0;
    std::vector<std::string> raw;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comment and whitespace
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r\n");
        line = line.substr(b, e - b + 1);

        char* endp = nullptr;
        const double v = std::strtod(line.c_str(), &endp);
        if (endp == line.c_str() || *endp != '\0')
            throw parse_error(source + ":" + std::to_string(lineno) +
                              ": not a decimal ordinate: '" + line + "'");
        if (!(v > 0))
            throw domain_error(source + ":" + std::to_string(lineno) +
                               ": ordinate must be positive, got " + line);
        if (!raw.empty() && !(v > t.ord53_.back()))
            throw domain_error(source + ":" + std::to_string(lineno) +
                               ": ordinates not strictly increasing (" +
                               raw.back() + " then " + line + ")");
        raw.push_back(line);
        t.ord53_.push_back(v);
    }
    if (!t.ord53_.empty()) {
        // gamma_1 = 14.134725... validated to 1e-3
        if (std::abs(t.ord53_.front() - 14.134725) > 1e-3)
            throw domain_error(source + ": first ordinate " + raw.front() +
                               " is not the first zero ordinate (expected 14.134725 +- 1e-3)");
    }
    t.ord128_.reserve(raw.size());
    t.ord256_.reserve(raw.size());
    for (const auto& s : raw) {
        t.ord128_.push_back(real_from_string<real128>(s));
        t.ord256_.push_back(real_from_string<real256>(s));
    }
    return t;
}

ZeroTable load_zeros(std::istream& in, const std::string& source) {
    return ZeroTable::from_stream(in, source);
}

ZeroTable load_zeros_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open zero table: " + path);
    return ZeroTable::from_stream(in, path);
}

} // namespace gbx
