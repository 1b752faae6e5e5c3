#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smithles/fgab.hpp"

namespace smithles::les {

using fgab::FgAbGroup;
using fgab::GroupHom;
using fgab::Int;

// Knowledge about one position of a long-exact-sequence window.
class NodeState {
public:
    enum class Kind { Known, Candidates, OrderConstrained, Unknown };

    static NodeState known(FgAbGroup g);
    static NodeState candidates(std::vector<FgAbGroup> cands);  // nonempty
    static NodeState order_constrained(std::vector<Int> allowed_orders);
    static NodeState finite_order();  // "some finite group"
    static NodeState unknown();

    Kind kind() const { return kind_; }
    const std::vector<FgAbGroup>& candidate_set() const { return candidates_; }
    const FgAbGroup& group() const;  // Known only
    bool finite_only() const { return finite_only_; }
    const std::vector<Int>& allowed_orders() const { return orders_; }

    bool operator==(const NodeState&) const = default;

private:
    Kind kind_ = Kind::Unknown;
    std::vector<FgAbGroup> candidates_;
    bool finite_only_ = false;
    std::vector<Int> orders_;
};

struct EdgeFlags {
    std::optional<bool> injective;
    std::optional<bool> surjective;
    std::optional<bool> zero;
    std::optional<FgAbGroup> kernel;  // abstract isomorphism type
    std::optional<FgAbGroup> image;

    bool operator==(const EdgeFlags&) const = default;
};

class EdgeState {
public:
    enum class Kind { KnownMap, PropertyConstrained, Unknown };

    static EdgeState known_map(GroupHom f);
    static EdgeState property_constrained(EdgeFlags flags);
    static EdgeState zero_map();  // flags-only zero marker (map made concrete on solve)
    static EdgeState unknown();

    Kind kind() const { return kind_; }
    const GroupHom& map() const;  // KnownMap only
    const EdgeFlags& flags() const { return flags_; }

    bool operator==(const EdgeState&) const = default;

private:
    Kind kind_ = Kind::Unknown;
    std::optional<GroupHom> map_;
    EdgeFlags flags_;
};

struct SequenceNode {
    int degree = 0;
    std::string label;
    NodeState state = NodeState::unknown();
};

struct SequenceEdge {
    std::string name;
    EdgeState state = EdgeState::unknown();
};

// A finite window of a long exact sequence: edge i connects node i to
// node i+1.
struct ExactSequence {
    std::vector<SequenceNode> nodes;
    std::vector<SequenceEdge> edges;

    void validate() const;  // shape and state invariants
};

// Extra knowledge fed to the solver, in the style of the geometric
// arguments that resolve extension ambiguities.
struct SideConstraint {
    enum class Kind { EmbedsInto, IsQuotientOf, MapEquals };
    Kind kind;
    std::size_t index = 0;  // node index (EmbedsInto/IsQuotientOf) or edge index
    std::optional<FgAbGroup> group;
    std::optional<GroupHom> map;

    static SideConstraint embeds_into(std::size_t node, FgAbGroup g);
    static SideConstraint is_quotient_of(std::size_t node, FgAbGroup g);
    static SideConstraint map_equals(std::size_t edge, GroupHom f);
};

struct PositionVerdict {
    std::size_t node_index;
    bool exact;
    FgAbGroup homology;        // ker/im at this node; trivial iff exact
    std::string witness;       // generator of the defect, in node coordinates
};

struct ExactnessReport {
    std::vector<PositionVerdict> positions;  // interior nodes only
    bool all_exact = true;

    std::string to_string() const;
};

// Verify im(f_{i-1}) = ker(f_i) at every interior node. Requires every
// node Known and every edge KnownMap (use solve for partial knowledge).
ExactnessReport check_exact(const ExactSequence& seq);

}  // namespace smithles::les
