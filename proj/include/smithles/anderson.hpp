#pragma once

#include <map>
#include <string>
#include <vector>

#include "smithles/les.hpp"

namespace smithles::anderson {

using fgab::FgAbGroup;
using fgab::GroupHom;

// Degreewise bordism data with a declared range; out-of-range queries are
// errors, never a silent zero.
class GradedGroup {
public:
    GradedGroup() = default;
    GradedGroup(std::string name, std::map<int, FgAbGroup> groups);

    const std::string& name() const { return name_; }
    int lowest_degree() const { return lo_; }
    int highest_degree() const { return hi_; }
    bool in_range(int d) const { return !groups_.empty() && d >= lo_ && d <= hi_; }
    const FgAbGroup& at(int d) const;
    const std::map<int, FgAbGroup>& groups() const { return groups_; }

private:
    std::string name_;
    std::map<int, FgAbGroup> groups_;
    int lo_ = 0, hi_ = -1;
};

// Which suspension of the Anderson dual classifies: deformation classes in
// dimension n correspond to [MTxi, Sigma^{n+1} I_Z]; the anomaly
// convention shifts one further.
enum class Convention { SigmaNPlus1, SigmaNPlus2 };

// I_Z Omega^n as an extension of a free part by a torsion part. The short
// exact sequence is recorded, not collapsed: the splitting used by
// as_group() is a display convenience, not canonical.
struct DualizedGroup {
    FgAbGroup torsion_part;  // rank 0; Pontrjagin self-dual of Tors(Omega_n)
    unsigned long free_rank = 0;
    int degree = 0;
    Convention convention = Convention::SigmaNPlus1;

    FgAbGroup as_group() const;
    std::string to_string() const { return as_group().to_string(); }
};

DualizedGroup anderson_dual_degree(const GradedGroup& g, int d,
                                   Convention conv = Convention::SigmaNPlus1);

// Blockwise dual of a homomorphism: Hom(-, Z) between the free quotients
// (the transpose) and Hom(-, Q/Z) between the torsion parts via the
// invariant-factor pairing.
struct DualizedMap {
    GroupHom free_dual;
    GroupHom torsion_dual;
};

DualizedMap dualize_map(const GroupHom& f);

struct DualizedLes {
    les::ExactSequence sequence;
    std::vector<std::string> warnings;  // e.g. mixed blocks assumed zero
};

// Arrow-reverse a fully known bordism window into its Anderson dual.
// `columns` provides each column label's graded data (needed one degree
// above every node for the free parts). Maps dualize blockwise when the
// contributing primal maps are known; otherwise the dual edge is Unknown.
DualizedLes dualize_les(const les::ExactSequence& primal,
                        const std::map<std::string, GradedGroup>& columns,
                        Convention conv = Convention::SigmaNPlus1);

}  // namespace smithles::anderson
