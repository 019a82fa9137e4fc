#include "radmom/report.hpp"

#include <sstream>

namespace radmom {

namespace {

std::string fraction_str(const Fraction& f) {
    std::ostringstream os;
    os << numerator(f) << '/' << denominator(f);
    return os.str();
}

}  // namespace

std::string moments_to_json(const MomentSet& ms, const CentralMomentSet* central) {
    std::string out = "{\n";
    bool first = true;
    for (const auto& e : ms.entries()) {
        if (!first) out += ",\n";
        first = false;
        out += "  \"m" + std::to_string(e.p) + std::to_string(e.q) + "\": \"" +
               to_string(e.value) + "\"";
    }
    if (central) {
        for (const auto& e : central->entries())
            out += ",\n  \"mu" + std::to_string(e.p) + std::to_string(e.q) +
                   "\": \"" + fraction_str(e.value) + "\"";
    }
    out += "\n}\n";
    return out;
}

std::string moments_to_csv(const MomentSet& ms, const CentralMomentSet* central) {
    std::string out = "p,q,value\n";
    for (const auto& e : ms.entries())
        out += std::to_string(e.p) + "," + std::to_string(e.q) + "," +
               to_string(e.value) + "\n";
    if (central) {
        for (const auto& e : central->entries())
            out += std::to_string(e.p) + "," + std::to_string(e.q) + "," +
                   fraction_str(e.value) + "\n";
    }
    return out;
}

}  // namespace radmom
