#include "smithles/anderson.hpp"

#include <sstream>

#include "smithles/errors.hpp"

namespace smithles::anderson {

using fgab::Int;
using fgab::IntMatrix;

GradedGroup::GradedGroup(std::string name, std::map<int, FgAbGroup> groups)
    : name_(std::move(name)), groups_(std::move(groups)) {
    if (!groups_.empty()) {
        lo_ = groups_.begin()->first;
        hi_ = groups_.rbegin()->first;
        for (int d = lo_; d <= hi_; ++d)
            if (!groups_.count(d))
                throw PresentationError("graded group '" + name_ + "' has a gap at degree " +
                                        std::to_string(d));
    }
}

const FgAbGroup& GradedGroup::at(int d) const {
    auto it = groups_.find(d);
    if (it == groups_.end())
        throw ContractError("degree " + std::to_string(d) + " outside the declared range of '" +
                            name_ + "'");
    return it->second;
}

FgAbGroup DualizedGroup::as_group() const {
    return FgAbGroup(free_rank, torsion_part.invariant_factors());
}

DualizedGroup anderson_dual_degree(const GradedGroup& g, int d, Convention conv) {
    int shift = conv == Convention::SigmaNPlus1 ? 0 : 1;
    DualizedGroup out;
    out.degree = d;
    out.convention = conv;
    // Tors(Hom(Omega_n, C^x)) is Pontrjagin-dual, hence isomorphic, to
    // Tors(Omega_n); Hom(Omega_{n+1}, Z) is free of the rank of Omega_{n+1}.
    out.torsion_part = g.at(d + shift).torsion_subgroup();
    out.free_rank = g.at(d + shift + 1).free_rank();
    return out;
}

DualizedMap dualize_map(const GroupHom& f) {
    const FgAbGroup& a = f.domain();
    const FgAbGroup& b = f.codomain();
    unsigned long ra = a.free_rank(), rb = b.free_rank();
    const auto& da = a.invariant_factors();
    const auto& eb = b.invariant_factors();

    // Free block transposes.
    IntMatrix ft(ra, rb);
    for (unsigned long i = 0; i < rb; ++i)
        for (unsigned long j = 0; j < ra; ++j) ft(j, i) = f.matrix()(i, j);
    GroupHom free_dual(FgAbGroup::free_group(rb), FgAbGroup::free_group(ra), std::move(ft));

    // Torsion block pulls characters back through the invariant-factor
    // pairing: psi_j |-> sum_i ((m_ji d_i / e_j) mod d_i) chi_i.
    IntMatrix td(da.size(), eb.size());
    for (std::size_t j = 0; j < eb.size(); ++j)
        for (std::size_t i = 0; i < da.size(); ++i) {
            const Int& m = f.matrix()(rb + j, ra + i);
            Int c = (m * da[i]) / eb[j] % da[i];
            if (c < 0) c += da[i];
            td(i, j) = c;
        }
    GroupHom torsion_dual(b.torsion_subgroup(), a.torsion_subgroup(), std::move(td));
    return {std::move(free_dual), std::move(torsion_dual)};
}

namespace {

// The primal edge from (label_a, deg_a) to (label_b, deg_b), if the window
// contains one with a known map.
const GroupHom* find_primal_map(const les::ExactSequence& primal, const std::string& label_a,
                                int deg_a, const std::string& label_b, int deg_b) {
    for (std::size_t i = 0; i + 1 < primal.nodes.size(); ++i) {
        const auto& na = primal.nodes[i];
        const auto& nb = primal.nodes[i + 1];
        if (na.label == label_a && na.degree == deg_a && nb.label == label_b &&
            nb.degree == deg_b) {
            if (primal.edges[i].state.kind() == les::EdgeState::Kind::KnownMap)
                return &primal.edges[i].state.map();
            return nullptr;
        }
    }
    return nullptr;
}

}  // namespace

DualizedLes dualize_les(const les::ExactSequence& primal,
                        const std::map<std::string, GradedGroup>& columns, Convention conv) {
    primal.validate();
    for (const auto& n : primal.nodes)
        if (n.state.kind() != les::NodeState::Kind::Known)
            throw ContractError("dualize_les needs every primal node Known");

    DualizedLes out;
    std::size_t n = primal.nodes.size();
    std::vector<DualizedGroup> duals(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& node = primal.nodes[i];
        auto col = columns.find(node.label);
        if (col == columns.end())
            throw ContractError("no graded data for column '" + node.label + "'");
        duals[i] = anderson_dual_degree(col->second, node.degree, conv);
        // Consistency: the window's own value must match the graded data.
        if (!(col->second.at(node.degree) == node.state.group()))
            throw PresentationError("window entry differs from the graded data at " +
                                    node.label + " degree " + std::to_string(node.degree));
    }

    // Arrow reversal: dual node i corresponds to primal node n-1-i.
    out.sequence.nodes.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& pnode = primal.nodes[n - 1 - i];
        auto& dnode = out.sequence.nodes[i];
        dnode.degree = pnode.degree;
        dnode.label = "IZ." + pnode.label;
        dnode.state = les::NodeState::known(duals[n - 1 - i].as_group());
    }
    out.sequence.edges.resize(n == 0 ? 0 : n - 1);
    bool mixed_warned = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        // Dual edge i: dual(primal node p+1) -> dual(primal node p).
        std::size_t p = n - 2 - i;
        const auto& na = primal.nodes[p];
        const auto& nb = primal.nodes[p + 1];
        out.sequence.edges[i].name = "IZ." + primal.edges[p].name;

        const DualizedGroup& da = duals[p];      // dual codomain
        const DualizedGroup& db = duals[p + 1];  // dual domain

        bool need_torsion = !da.torsion_part.is_trivial() && !db.torsion_part.is_trivial();
        bool need_free = da.free_rank > 0 && db.free_rank > 0;
        // The free-to-torsion block is the nonsplit-extension data; it can
        // only be defaulted to zero (with a warning) when real dualized
        // blocks are present, never invented on its own.
        bool mixed_positive = db.free_rank > 0 && !da.torsion_part.is_trivial();

        const GroupHom* torsion_src = nullptr;
        const GroupHom* free_src = nullptr;
        if (need_torsion)
            torsion_src = find_primal_map(primal, na.label, na.degree, nb.label, nb.degree);
        if (need_free)
            free_src = find_primal_map(primal, na.label, na.degree + 1, nb.label,
                                       nb.degree + 1);
        bool have_real_data = (need_torsion && torsion_src) || (need_free && free_src);
        if ((need_torsion && !torsion_src) || (need_free && !free_src) ||
            (mixed_positive && !have_real_data)) {
            out.sequence.edges[i].state = les::EdgeState::unknown();
            continue;
        }

        FgAbGroup dom = db.as_group();
        FgAbGroup cod = da.as_group();
        IntMatrix mat(cod.generator_count(), dom.generator_count());
        if (need_free) {
            DualizedMap dm = dualize_map(*free_src);
            for (unsigned long r = 0; r < da.free_rank; ++r)
                for (unsigned long c = 0; c < db.free_rank; ++c)
                    mat(r, c) = dm.free_dual.matrix()(r, c);
        }
        if (need_torsion) {
            DualizedMap dm = dualize_map(*torsion_src);
            std::size_t ta = da.torsion_part.invariant_factors().size();
            std::size_t tb = db.torsion_part.invariant_factors().size();
            for (std::size_t r = 0; r < ta; ++r)
                for (std::size_t c = 0; c < tb; ++c)
                    mat(da.free_rank + r, db.free_rank + c) = dm.torsion_dual.matrix()(r, c);
        }
        if (!mixed_warned && mixed_positive) {
            out.warnings.push_back(
                "mixed free-to-torsion blocks assumed zero (nonsplit extension data "
                "not determined by the window)");
            mixed_warned = true;
        }
        out.sequence.edges[i].state = les::EdgeState::known_map(GroupHom(dom, cod, mat));
    }
    return out;
}

}  // namespace smithles::anderson
