#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "smithles/bundles.hpp"

namespace smithles::gradedalg {

// Tangential structures handled by the lifting-obstruction tables.
enum class Structure { O, SO, Spinc, Spin, String };

Structure structure_by_name(const std::string& name);  // o, so, spinc, spin, string
std::string structure_name(Structure s);

// Verdict for one obstruction class of one bundle.
struct ObstructionCheck {
    std::string label;  // "w1", "w2", "w2 lifts to Z", "w4"
    bool vanishes;
};

// Does k*w admit the structure, class by class. For String this is only
// decidable over BZ2 (lambda mod 2 = w4 there); other bases throw
// UnsupportedCaseError rather than guessing.
std::vector<ObstructionCheck> obstruction_checks(Structure s, const BundleExpr& b);
bool lift_obstruction_vanishes(Structure s, const BundleExpr& b);

struct PeriodTraceRow {
    long k;
    std::vector<ObstructionCheck> checks;
    bool lifts;
};

struct PeriodResult {
    std::optional<unsigned long> period;  // nullopt: exceeds the search bound
    std::vector<PeriodTraceRow> trace;
};

// Smallest k in 1..search_bound with lift_obstruction_vanishes(s, k*w).
// w must be a genuine (non-virtual, nonzero) combination.
PeriodResult smith_period(Structure s, const BundleExpr& w, unsigned long search_bound);

// Count of s with 0 < s <= k and s congruent to 0, 1, 2 or 4 mod 8.
unsigned long adams_phi(unsigned long k);

// 2^adams_phi(k).
mpz_class james_period(unsigned long k);

}  // namespace smithles::gradedalg
