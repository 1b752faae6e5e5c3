#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smithles/les.hpp"

namespace smithles::les {

struct Ambiguity {
    std::size_t node_index;
    std::vector<FgAbGroup> candidates;
};

struct Contradiction {
    std::size_t position;  // node or edge index, per description
    std::string description;
};

struct SolveResult {
    ExactSequence sequence;
    std::vector<Ambiguity> ambiguities;
    std::optional<Contradiction> contradiction;
    unsigned iterations = 0;

    bool ok() const { return !contradiction.has_value(); }
    std::string report() const;
};

struct SolveOptions {
    long map_entry_window = 64;    // free-part entries for map enumeration
    Int enumeration_order_limit = 4096;  // max |group| for edge resolution
    unsigned max_iterations = 64;
};

// Exactness constraint propagation to a fixed point. Rules:
//   R1 zero-neighbor flags, R2 exact order arithmetic, R3 forced short
//   exact sequences -> extension candidates, R4 side-constraint filtering,
//   R5 unique-map resolution via enumeration.
// Sound: any assignment consistent with the inputs survives. Ambiguities
// are reported, never broken by heuristics.
SolveResult solve(const ExactSequence& seq, const std::vector<SideConstraint>& constraints = {},
                  const SolveOptions& options = {});

}  // namespace smithles::les
