#include "smithles/solver.hpp"

#include <algorithm>
#include <sstream>

#include "smithles/errors.hpp"

namespace smithles::les {

namespace {

// Mutable solver state; candidate lists use an empty optional for "no
// information yet" so that an actually-empty list always means conflict.
struct NodeWork {
    std::optional<std::vector<FgAbGroup>> candidates;
    bool finite_only = false;
    std::optional<std::vector<Int>> allowed_orders;

    std::optional<FgAbGroup> known() const {
        if (candidates && candidates->size() == 1) return candidates->front();
        return std::nullopt;
    }
};

struct EdgeWork {
    std::optional<GroupHom> map;
    std::optional<bool> injective, surjective, zero;
    std::optional<FgAbGroup> kernel, image;
    std::optional<Int> image_order;
    bool derived_from_map = false;
};

class Solver {
public:
    Solver(const ExactSequence& seq, const std::vector<SideConstraint>& constraints,
           const SolveOptions& options)
        : input_(seq), constraints_(constraints), options_(options) {}

    SolveResult run();

private:
    const ExactSequence& input_;
    const std::vector<SideConstraint>& constraints_;
    const SolveOptions& options_;

    std::vector<NodeWork> nodes_;
    std::vector<EdgeWork> edges_;
    bool changed_ = false;
    std::optional<Contradiction> contradiction_;

    void fail(std::size_t pos, const std::string& what) {
        if (!contradiction_) contradiction_ = Contradiction{pos, what};
    }
    bool failed() const { return contradiction_.has_value(); }

    void seed();
    void apply_constraints();
    void derive_from_maps();
    void edge_local_rules();
    void exactness_rules();
    void order_rules();
    void extension_rule();
    void resolve_edges();

    // -- small setters that track change/conflict ------------------------
    void set_bool(std::optional<bool>& slot, bool value, std::size_t pos, const char* what) {
        if (slot) {
            if (*slot != value) fail(pos, std::string("conflicting ") + what);
            return;
        }
        slot = value;
        changed_ = true;
    }
    void set_group(std::optional<FgAbGroup>& slot, const FgAbGroup& value, std::size_t pos,
                   const char* what) {
        if (slot) {
            if (!(*slot == value)) fail(pos, std::string("conflicting ") + what);
            return;
        }
        slot = value;
        changed_ = true;
    }
    void set_order(std::optional<Int>& slot, const Int& value, std::size_t pos, const char* what) {
        if (slot) {
            if (*slot != value) fail(pos, std::string("conflicting ") + what);
            return;
        }
        slot = value;
        changed_ = true;
    }
    void narrow_node(std::size_t i, const std::vector<FgAbGroup>& allowed);
    void set_node_known(std::size_t i, const FgAbGroup& g) { narrow_node(i, {g}); }

    std::optional<FgAbGroup> node_group(std::size_t i) const { return nodes_[i].known(); }
};

void Solver::seed() {
    nodes_.resize(input_.nodes.size());
    edges_.resize(input_.edges.size());
    for (std::size_t i = 0; i < input_.nodes.size(); ++i) {
        const NodeState& s = input_.nodes[i].state;
        switch (s.kind()) {
            case NodeState::Kind::Known:
            case NodeState::Kind::Candidates:
                nodes_[i].candidates = s.candidate_set();
                break;
            case NodeState::Kind::OrderConstrained:
                nodes_[i].finite_only = s.finite_only();
                if (!s.allowed_orders().empty()) nodes_[i].allowed_orders = s.allowed_orders();
                break;
            case NodeState::Kind::Unknown:
                break;
        }
    }
    for (std::size_t i = 0; i < input_.edges.size(); ++i) {
        const EdgeState& s = input_.edges[i].state;
        if (s.kind() == EdgeState::Kind::KnownMap) {
            edges_[i].map = s.map();
        } else if (s.kind() == EdgeState::Kind::PropertyConstrained) {
            const EdgeFlags& f = s.flags();
            edges_[i].injective = f.injective;
            edges_[i].surjective = f.surjective;
            edges_[i].zero = f.zero;
            edges_[i].kernel = f.kernel;
            edges_[i].image = f.image;
        }
    }
}

void Solver::narrow_node(std::size_t i, const std::vector<FgAbGroup>& allowed) {
    NodeWork& n = nodes_[i];
    std::vector<FgAbGroup> next;
    if (!n.candidates) {
        next = allowed;
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
    } else {
        for (const FgAbGroup& g : *n.candidates)
            if (std::find(allowed.begin(), allowed.end(), g) != allowed.end())
                next.push_back(g);
        if (next.size() == n.candidates->size()) return;  // no narrowing
    }
    // Order constraints veto candidates as well.
    std::vector<FgAbGroup> filtered;
    for (const FgAbGroup& g : next) {
        if (n.finite_only && !g.is_finite()) continue;
        if (n.allowed_orders && g.is_finite()) {
            const auto& ords = *n.allowed_orders;
            if (std::find(ords.begin(), ords.end(), *g.order()) == ords.end()) continue;
        }
        filtered.push_back(g);
    }
    if (filtered.empty()) {
        fail(i, "node " + std::to_string(i) + " has no remaining candidates");
        return;
    }
    n.candidates = std::move(filtered);
    changed_ = true;
}

void Solver::apply_constraints() {
    for (const SideConstraint& c : constraints_) {
        if (failed()) return;
        switch (c.kind) {
            case SideConstraint::Kind::EmbedsInto:
            case SideConstraint::Kind::IsQuotientOf: {
                if (c.index >= nodes_.size()) {
                    fail(c.index, "constraint references a missing node");
                    return;
                }
                if (!c.group || !c.group->is_finite()) continue;  // nothing to filter with
                NodeWork& n = nodes_[c.index];
                if (!n.candidates) continue;
                std::vector<FgAbGroup> kept;
                for (const FgAbGroup& g : *n.candidates) {
                    if (!g.is_finite()) continue;
                    // Finite abelian groups are self-dual, so "quotient of G"
                    // and "subgroup of G" admit the same isomorphism types.
                    if (fgab::embeds(g, *c.group)) kept.push_back(g);
                }
                if (kept.size() != n.candidates->size()) {
                    if (kept.empty()) {
                        fail(c.index, "side constraint eliminated every candidate");
                        return;
                    }
                    n.candidates = std::move(kept);
                    changed_ = true;
                }
                break;
            }
            case SideConstraint::Kind::MapEquals: {
                if (c.index >= edges_.size()) {
                    fail(c.index, "constraint references a missing edge");
                    return;
                }
                if (!c.map) continue;
                EdgeWork& e = edges_[c.index];
                if (e.map) {
                    if (!(*e.map == *c.map))
                        fail(c.index, "MapEquals conflicts with an already-known map");
                } else {
                    e.map = c.map;
                    changed_ = true;
                }
                break;
            }
        }
    }
}

void Solver::derive_from_maps() {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        EdgeWork& e = edges_[i];
        if (!e.map || e.derived_from_map) continue;
        // Maps pin down the adjacent node groups too.
        set_node_known(i, e.map->domain());
        set_node_known(i + 1, e.map->codomain());
        if (failed()) return;
        auto kic = fgab::kernel_image_cokernel(*e.map);
        set_group(e.kernel, kic.kernel, i, "kernel");
        set_group(e.image, kic.image, i, "image");
        set_bool(e.injective, kic.kernel.is_trivial(), i, "injectivity");
        set_bool(e.zero, e.map->is_zero(), i, "zero flag");
        set_bool(e.surjective, kic.cokernel.is_trivial(), i, "surjectivity");
        e.derived_from_map = true;
        changed_ = true;
    }
}

void Solver::edge_local_rules() {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (failed()) return;
        EdgeWork& e = edges_[i];
        auto dom = node_group(i);
        auto cod = node_group(i + 1);

        if (dom && dom->is_trivial()) set_bool(e.zero, true, i, "zero flag");
        if (cod && cod->is_trivial()) set_bool(e.zero, true, i, "zero flag");
        // No nonzero map from a finite group into a torsion-free group.
        if (dom && cod && dom->is_finite() && !dom->is_trivial() && cod->is_torsion_free() &&
            !cod->is_trivial())
            set_bool(e.zero, true, i, "zero flag");

        if (e.zero && *e.zero) {
            if (dom) set_group(e.kernel, *dom, i, "kernel");
            set_group(e.image, FgAbGroup::trivial(), i, "image");
        }
        if (e.injective && *e.injective) {
            set_group(e.kernel, FgAbGroup::trivial(), i, "kernel");
            if (dom) set_group(e.image, *dom, i, "image");
        }
        if (e.surjective && *e.surjective && cod) set_group(e.image, *cod, i, "image");

        if (e.kernel && e.kernel->is_trivial()) set_bool(e.injective, true, i, "injectivity");
        // Abstract type comparisons only decide subgroup equality for
        // finite groups (2Z inside Z is a counterexample otherwise).
        if (e.kernel && dom && dom->is_finite() && *e.kernel == *dom && !dom->is_trivial())
            set_bool(e.zero, true, i, "zero flag");
        if (e.image && e.image->is_trivial()) set_bool(e.zero, true, i, "zero flag");
        if (e.image && cod && cod->is_finite() && *e.image == *cod)
            set_bool(e.surjective, true, i, "surjectivity");

        // Flag sanity.
        if (e.zero && e.injective && *e.zero && *e.injective && dom && !dom->is_trivial())
            fail(i, "edge both zero and injective with nontrivial domain");
        if (e.image) {
            if (auto o = e.image->order()) set_order(e.image_order, *o, i, "image order");
        }
    }
}

void Solver::exactness_rules() {
    // At interior node i: im(edge i-1) = ker(edge i), as subgroups of node
    // i. Abstract isomorphism types transfer both ways.
    for (std::size_t i = 1; i + 1 < input_.nodes.size(); ++i) {
        if (failed()) return;
        EdgeWork& in = edges_[i - 1];
        EdgeWork& out = edges_[i];
        if (in.image && !out.kernel) set_group(out.kernel, *in.image, i, "kernel");
        if (out.kernel && !in.image) set_group(in.image, *out.kernel, i, "image");
        if (in.image && out.kernel && !(*in.image == *out.kernel))
            fail(i, "exactness mismatch: im != ker at node " + std::to_string(i));

        // First isomorphism theorem through an explicit incoming map:
        // im(out) = node_i / ker(out) = node_i / im(in) = coker(in).
        if (in.map) {
            FgAbGroup cok = in.map->cokernel();
            set_group(out.image, cok, i, "image");
        }
        // Zero-neighbor rules at the subgroup level: a surjective incoming
        // map kills the outgoing one, and vice versa.
        auto mid = node_group(i);
        if (in.surjective && *in.surjective) {
            set_bool(out.zero, true, i, "zero flag");
            if (mid) set_group(out.kernel, *mid, i, "kernel");
        }
        if (out.zero && *out.zero) set_bool(in.surjective, true, i - 1, "surjectivity");
    }
}

void Solver::order_rules() {
    // |node_i| = |ker e_i| * |im e_i| with |ker e_i| = |im e_{i-1}| on the
    // interior; derive whichever piece is missing.
    for (std::size_t i = 1; i + 1 < input_.nodes.size(); ++i) {
        if (failed()) return;
        EdgeWork& in = edges_[i - 1];
        EdgeWork& out = edges_[i];
        auto mid = node_group(i);
        std::optional<Int> mid_order;
        if (mid && mid->is_finite()) mid_order = *mid->order();

        if (mid_order && in.image_order) {
            if (*mid_order % *in.image_order != 0) {
                fail(i, "kernel order does not divide the node order");
                return;
            }
            set_order(out.image_order, *mid_order / *in.image_order, i, "image order");
        }
        if (mid_order && out.image_order && !in.image_order) {
            if (*mid_order % *out.image_order != 0) {
                fail(i, "image order does not divide the node order");
                return;
            }
            set_order(in.image_order, *mid_order / *out.image_order, i - 1, "image order");
        }
        if (!mid && in.image_order && out.image_order) {
            Int forced = *in.image_order * *out.image_order;
            if (nodes_[i].candidates) {
                std::vector<FgAbGroup> kept;
                for (const FgAbGroup& g : *nodes_[i].candidates)
                    if (g.is_finite() && *g.order() == forced) kept.push_back(g);
                if (kept.size() != nodes_[i].candidates->size()) {
                    if (kept.empty()) {
                        fail(i, "no candidate has the exact order " + forced.get_str());
                        return;
                    }
                    nodes_[i].candidates = std::move(kept);
                    changed_ = true;
                }
            } else if (!nodes_[i].allowed_orders) {
                nodes_[i].finite_only = true;
                nodes_[i].allowed_orders = std::vector<Int>{forced};
                changed_ = true;
            }
        }
    }
}

void Solver::extension_rule() {
    // A node with known flanking images sits in 0 -> im(in) -> X -> im(out) -> 0.
    for (std::size_t i = 1; i + 1 < input_.nodes.size(); ++i) {
        if (failed()) return;
        if (nodes_[i].known()) continue;
        const EdgeWork& in = edges_[i - 1];
        const EdgeWork& out = edges_[i];
        if (!in.image || !out.image) continue;
        const FgAbGroup& sub = *in.image;
        const FgAbGroup& quot = *out.image;
        if (quot.is_trivial()) {
            set_node_known(i, sub);
        } else if (sub.is_trivial()) {
            set_node_known(i, quot);
        } else if (sub.is_finite() && quot.is_finite()) {
            narrow_node(i, fgab::extension_candidates(sub, quot));
        }
    }
}

void Solver::resolve_edges() {
    // When an edge's endpoints are small known groups, enumerate the
    // homomorphisms consistent with everything derived; a unique survivor
    // is forced. The true map always survives, so this never guesses.
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (failed()) return;
        EdgeWork& e = edges_[i];
        if (e.map) continue;
        auto dom = node_group(i);
        auto cod = node_group(i + 1);
        if (!dom || !cod) continue;
        bool small = dom->is_finite() && cod->is_finite() &&
                     *dom->order() <= options_.enumeration_order_limit &&
                     *cod->order() <= options_.enumeration_order_limit;
        if (!small) {
            // A zero edge between known groups is concrete regardless of size.
            if (e.zero && *e.zero) {
                e.map = GroupHom::zero(*dom, *cod);
                changed_ = true;
            }
            continue;
        }
        fgab::HomFlagsFilter filter;
        filter.injective = e.injective;
        filter.surjective = e.surjective;
        filter.zero = e.zero;
        filter.kernel = e.kernel;
        filter.image = e.image;
        std::vector<GroupHom> cands;
        try {
            cands = fgab::enumerate_maps(*dom, *cod, filter, options_.map_entry_window);
        } catch (const UnsupportedCaseError&) {
            continue;
        }
        // Exactness with known neighbor maps: composites must vanish.
        auto composite_zero_with_neighbors = [&](const GroupHom& h) {
            if (i > 0 && edges_[i - 1].map &&
                !h.compose_after(*edges_[i - 1].map).is_zero())
                return false;
            if (i + 1 < edges_.size() && edges_[i + 1].map &&
                !edges_[i + 1].map->compose_after(h).is_zero())
                return false;
            return true;
        };
        std::vector<GroupHom> kept;
        for (const GroupHom& h : cands)
            if (composite_zero_with_neighbors(h)) kept.push_back(h);
        if (kept.empty()) {
            fail(i, "no homomorphism satisfies the derived constraints on edge " +
                        std::to_string(i));
            return;
        }
        if (kept.size() == 1) {
            e.map = kept.front();
            changed_ = true;
        }
    }
}

SolveResult Solver::run() {
    seed();
    SolveResult result;
    unsigned iter = 0;
    for (; iter < options_.max_iterations && !failed(); ++iter) {
        changed_ = false;
        apply_constraints();
        derive_from_maps();
        edge_local_rules();
        exactness_rules();
        order_rules();
        extension_rule();
        resolve_edges();
        if (!changed_) break;
    }
    result.iterations = iter;

    // A fully known window must actually be exact; the propagation rules
    // compare abstract types only, which cannot see a subgroup-level
    // defect in inconsistent input.
    if (!contradiction_) {
        bool fully_known = true;
        for (const NodeWork& n : nodes_)
            if (!n.known()) fully_known = false;
        for (const EdgeWork& e : edges_)
            if (!e.map) fully_known = false;
        if (fully_known && !nodes_.empty()) {
            ExactSequence complete = input_;
            for (std::size_t i = 0; i < nodes_.size(); ++i)
                complete.nodes[i].state = NodeState::known(*nodes_[i].known());
            for (std::size_t i = 0; i < edges_.size(); ++i)
                complete.edges[i].state = EdgeState::known_map(*edges_[i].map);
            ExactnessReport report = check_exact(complete);
            for (const PositionVerdict& p : report.positions)
                if (!p.exact) {
                    fail(p.node_index, "completed window is not exact at node " +
                                           std::to_string(p.node_index) + " (" + p.witness +
                                           ")");
                    break;
                }
        }
    }
    result.contradiction = contradiction_;

    // Assemble the refined sequence.
    result.sequence = input_;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        NodeWork& n = nodes_[i];
        SequenceNode& out = result.sequence.nodes[i];
        if (n.candidates) {
            out.state = NodeState::candidates(*n.candidates);
            if (n.candidates->size() > 1)
                result.ambiguities.push_back(Ambiguity{i, *n.candidates});
        } else if (n.allowed_orders) {
            out.state = NodeState::order_constrained(*n.allowed_orders);
        } else if (n.finite_only) {
            out.state = NodeState::finite_order();
        } else {
            out.state = NodeState::unknown();
        }
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        EdgeWork& e = edges_[i];
        SequenceEdge& out = result.sequence.edges[i];
        if (e.map) {
            out.state = EdgeState::known_map(*e.map);
        } else if (e.injective || e.surjective || e.zero || e.kernel || e.image) {
            EdgeFlags flags;
            flags.injective = e.injective;
            flags.surjective = e.surjective;
            flags.zero = e.zero;
            flags.kernel = e.kernel;
            flags.image = e.image;
            out.state = EdgeState::property_constrained(flags);
        } else {
            out.state = EdgeState::unknown();
        }
    }
    return result;
}

}  // namespace

std::string SolveResult::report() const {
    std::ostringstream os;
    if (contradiction)
        os << "CONTRADICTION at position " << contradiction->position << ": "
           << contradiction->description << "\n";
    for (const Ambiguity& a : ambiguities) {
        os << "ambiguous node " << a.node_index << ": {";
        for (std::size_t i = 0; i < a.candidates.size(); ++i)
            os << (i ? ", " : "") << a.candidates[i].to_string();
        os << "}\n";
    }
    if (!contradiction && ambiguities.empty()) os << "fully determined\n";
    return os.str();
}

SolveResult solve(const ExactSequence& seq, const std::vector<SideConstraint>& constraints,
                  const SolveOptions& options) {
    seq.validate();
    Solver solver(seq, constraints, options);
    return solver.run();
}

}  // namespace smithles::les
