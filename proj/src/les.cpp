#include "smithles/les.hpp"

#include <algorithm>
#include <sstream>

#include "smithles/errors.hpp"

namespace smithles::les {

NodeState NodeState::known(FgAbGroup g) {
    NodeState s;
    s.kind_ = Kind::Known;
    s.candidates_ = {std::move(g)};
    return s;
}

NodeState NodeState::candidates(std::vector<FgAbGroup> cands) {
    if (cands.empty()) throw PresentationError("empty candidate set");
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    if (cands.size() == 1) return known(cands.front());
    NodeState s;
    s.kind_ = Kind::Candidates;
    s.candidates_ = std::move(cands);
    return s;
}

NodeState NodeState::order_constrained(std::vector<Int> allowed_orders) {
    NodeState s;
    s.kind_ = Kind::OrderConstrained;
    s.finite_only_ = true;
    std::sort(allowed_orders.begin(), allowed_orders.end(),
              [](const Int& a, const Int& b) { return cmp(a, b) < 0; });
    s.orders_ = std::move(allowed_orders);
    return s;
}

NodeState NodeState::finite_order() {
    NodeState s;
    s.kind_ = Kind::OrderConstrained;
    s.finite_only_ = true;
    return s;
}

NodeState NodeState::unknown() { return NodeState(); }

const FgAbGroup& NodeState::group() const {
    if (kind_ != Kind::Known) throw ContractError("node group is not known");
    return candidates_.front();
}

EdgeState EdgeState::known_map(GroupHom f) {
    EdgeState e;
    e.kind_ = Kind::KnownMap;
    e.map_ = std::move(f);
    return e;
}

EdgeState EdgeState::property_constrained(EdgeFlags flags) {
    if (flags.zero && flags.injective && *flags.zero && *flags.injective &&
        flags.kernel && !flags.kernel->is_trivial())
        throw PresentationError("zero and injective with nontrivial kernel");
    EdgeState e;
    e.kind_ = Kind::PropertyConstrained;
    e.flags_ = std::move(flags);
    return e;
}

EdgeState EdgeState::zero_map() {
    EdgeFlags f;
    f.zero = true;
    return property_constrained(std::move(f));
}

EdgeState EdgeState::unknown() { return EdgeState(); }

const GroupHom& EdgeState::map() const {
    if (!map_) throw ContractError("edge map is not known");
    return *map_;
}

void ExactSequence::validate() const {
    if (nodes.empty()) {
        if (!edges.empty()) throw PresentationError("edges without nodes");
        return;
    }
    if (edges.size() + 1 != nodes.size())
        throw PresentationError("sequence needs exactly nodes-1 edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].state.kind() != EdgeState::Kind::KnownMap) continue;
        const GroupHom& f = edges[i].state.map();
        if (nodes[i].state.kind() == NodeState::Kind::Known &&
            !(f.domain() == nodes[i].state.group()))
            throw PresentationError("edge " + std::to_string(i) +
                                    " domain differs from its node");
        if (nodes[i + 1].state.kind() == NodeState::Kind::Known &&
            !(f.codomain() == nodes[i + 1].state.group()))
            throw PresentationError("edge " + std::to_string(i) +
                                    " codomain differs from its node");
    }
}

SideConstraint SideConstraint::embeds_into(std::size_t node, FgAbGroup g) {
    return {Kind::EmbedsInto, node, std::move(g), std::nullopt};
}
SideConstraint SideConstraint::is_quotient_of(std::size_t node, FgAbGroup g) {
    return {Kind::IsQuotientOf, node, std::move(g), std::nullopt};
}
SideConstraint SideConstraint::map_equals(std::size_t edge, GroupHom f) {
    return {Kind::MapEquals, edge, std::nullopt, std::move(f)};
}

std::string ExactnessReport::to_string() const {
    std::ostringstream os;
    for (const auto& p : positions) {
        os << "position " << p.node_index << ": "
           << (p.exact ? "exact" : "NOT exact, homology " + p.homology.to_string() +
                                       ", witness " + p.witness)
           << "\n";
    }
    return os.str();
}

ExactnessReport check_exact(const ExactSequence& seq) {
    seq.validate();
    for (const auto& n : seq.nodes)
        if (n.state.kind() != NodeState::Kind::Known)
            throw ContractError("check_exact needs every node Known (use solve)");
    for (const auto& e : seq.edges)
        if (e.state.kind() != EdgeState::Kind::KnownMap)
            throw ContractError("check_exact needs every edge KnownMap (use solve)");

    ExactnessReport report;
    for (std::size_t i = 1; i + 1 < seq.nodes.size(); ++i) {
        const GroupHom& f = seq.edges[i - 1].state.map();  // into node i
        const GroupHom& g = seq.edges[i].state.map();      // out of node i

        fgab::IntMatrix lattice = zero_preimage_lattice(g);
        fgab::IntMatrix basis = fgab::lattice_basis(lattice);

        PositionVerdict verdict{i, true, FgAbGroup::trivial(), ""};

        // im(f) inside ker(g)? Coordinates of every image generator and
        // every node relation in the kernel lattice basis.
        std::size_t img_cols = f.matrix().cols();
        fgab::IntMatrix rel = seq.nodes[i].state.group().relation_matrix();
        fgab::IntMatrix coords(basis.cols(), img_cols + rel.cols());
        bool contained = true;
        std::string offender;
        for (std::size_t j = 0; j < img_cols && contained; ++j) {
            std::vector<Int> sol;
            if (!fgab::solve_linear(basis, f.matrix().column(j), sol)) {
                contained = false;
                offender = "image of domain generator " + std::to_string(j);
                break;
            }
            for (std::size_t r = 0; r < basis.cols(); ++r) coords(r, j) = sol[r];
        }
        for (std::size_t j = 0; j < rel.cols() && contained; ++j) {
            std::vector<Int> sol;
            if (!fgab::solve_linear(basis, rel.column(j), sol))
                throw PresentationError("node relations escape the kernel lattice");
            for (std::size_t r = 0; r < basis.cols(); ++r) coords(r, img_cols + j) = sol[r];
        }

        if (!contained) {
            verdict.exact = false;
            verdict.homology = FgAbGroup::trivial();  // im not even inside ker
            verdict.witness = offender + " is not killed by the outgoing map";
            report.all_exact = false;
            report.positions.push_back(std::move(verdict));
            continue;
        }

        FgAbGroup homology = fgab::cokernel(coords);
        if (!homology.is_trivial()) {
            verdict.exact = false;
            verdict.homology = homology;
            // A kernel-lattice generator not accounted for by the image.
            std::ostringstream os;
            os << "kernel class of " << seq.edges[i].name << " not hit; ker/im = "
               << homology.to_string();
            verdict.witness = os.str();
            report.all_exact = false;
        }
        report.positions.push_back(std::move(verdict));
    }
    return report;
}

}  // namespace smithles::les
