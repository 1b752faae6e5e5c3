#include "smithles/structures.hpp"

#include <algorithm>
#include <cctype>

#include "smithles/errors.hpp"

namespace smithles::gradedalg {

Structure structure_by_name(const std::string& name) {
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
    if (n == "o") return Structure::O;
    if (n == "so") return Structure::SO;
    if (n == "spinc" || n == "spin-c") return Structure::Spinc;
    if (n == "spin") return Structure::Spin;
    if (n == "string") return Structure::String;
    throw UnsupportedCaseError("unknown tangential structure '" + name +
                               "' (supported: o, so, spinc, spin, string)");
}

std::string structure_name(Structure s) {
    switch (s) {
        case Structure::O: return "O";
        case Structure::SO: return "SO";
        case Structure::Spinc: return "Spinc";
        case Structure::Spin: return "Spin";
        case Structure::String: return "String";
    }
    return "?";
}

std::vector<ObstructionCheck> obstruction_checks(Structure s, const BundleExpr& b) {
    // Degree 4 suffices: every obstruction class in the tables lives in
    // degree 1, 2 or 4.
    F2Poly w = total_sw(b, 4);
    F2Poly w1 = w.homogeneous_part(1);
    F2Poly w2 = w.homogeneous_part(2);
    F2Poly w4 = w.homogeneous_part(4);
    const BaseInfo& info = base_info(b.base());

    std::vector<ObstructionCheck> checks;
    switch (s) {
        case Structure::O:
            break;  // every bundle is O
        case Structure::SO:
            checks.push_back({"w1", w1.is_zero()});
            break;
        case Structure::Spin:
            checks.push_back({"w1", w1.is_zero()});
            checks.push_back({"w2", w2.is_zero()});
            break;
        case Structure::Spinc:
            checks.push_back({"w1", w1.is_zero()});
            checks.push_back({"w2 lifts to Z",
                              info.every_degree2_class_lifts || w2.is_zero()});
            break;
        case Structure::String:
            if (b.base() != Base::BZ2)
                throw UnsupportedCaseError(
                    "string obstruction is only decidable over BZ2 (lambda mod 2 = w4 "
                    "there); no answer is guessed elsewhere");
            checks.push_back({"w1", w1.is_zero()});
            checks.push_back({"w2", w2.is_zero()});
            checks.push_back({"w4", w4.is_zero()});
            break;
    }
    return checks;
}

bool lift_obstruction_vanishes(Structure s, const BundleExpr& b) {
    auto checks = obstruction_checks(s, b);
    return std::all_of(checks.begin(), checks.end(),
                       [](const ObstructionCheck& c) { return c.vanishes; });
}

PeriodResult smith_period(Structure s, const BundleExpr& w, unsigned long search_bound) {
    if (search_bound < 1) throw ContractError("smith_period needs search_bound >= 1");
    if (!w.is_genuine())
        throw ContractError("smith_period needs a genuine (non-virtual) bundle");
    PeriodResult result;
    for (unsigned long k = 1; k <= search_bound; ++k) {
        BundleExpr kb = w.scaled((long)k);
        PeriodTraceRow row{(long)k, obstruction_checks(s, kb), false};
        row.lifts = std::all_of(row.checks.begin(), row.checks.end(),
                                [](const ObstructionCheck& c) { return c.vanishes; });
        result.trace.push_back(row);
        if (row.lifts) {
            result.period = k;
            return result;
        }
    }
    return result;  // period unset: exceeds bound
}

unsigned long adams_phi(unsigned long k) {
    // Residues 0, 1, 2, 4 mod 8: four per full block of eight.
    unsigned long full = k / 8, rest = k % 8;
    unsigned long extra = 0;
    for (unsigned long r : {1UL, 2UL, 4UL})
        if (rest >= r) ++extra;
    return 4 * full + extra;
}

mpz_class james_period(unsigned long k) {
    mpz_class p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), adams_phi(k));
    return p;
}

}  // namespace smithles::gradedalg
