#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "smithles/int_matrix.hpp"

namespace smithles::fgab {

// Finitely generated abelian group in canonical form: free rank plus an
// invariant-factor chain d_1 | d_2 | ... | d_k with every d_i >= 2.
// Equality of canonical forms is isomorphism.
class FgAbGroup {
public:
    FgAbGroup() = default;  // trivial group

    // Normalizes any list of moduli (each >= 2 after dropping 1s; 0 adds
    // free rank) into the canonical chain.
    FgAbGroup(unsigned long free_rank, std::vector<Int> torsion_moduli);

    static FgAbGroup trivial() { return FgAbGroup(); }
    static FgAbGroup free_group(unsigned long rank) { return FgAbGroup(rank, {}); }
    static FgAbGroup cyclic(const Int& n);  // Z/n, n >= 2; n == 0 means Z

    unsigned long free_rank() const { return free_rank_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }
    std::size_t generator_count() const { return free_rank_ + factors_.size(); }

    bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    bool is_torsion_free() const { return factors_.empty(); }
    std::optional<Int> order() const;  // nullopt when infinite

    FgAbGroup torsion_subgroup() const { return FgAbGroup(0, factors_); }

    // Order of generator i under the convention: free generators first,
    // then torsion generators with ascending invariant factor. 0 means
    // infinite order.
    Int generator_order(std::size_t i) const;

    // Diagonal relation matrix diag(0,...,0, d_1,...,d_k) presenting the
    // group on its standard generators (one relation column per generator).
    IntMatrix relation_matrix() const;

    FgAbGroup direct_sum(const FgAbGroup& other) const;

    bool operator==(const FgAbGroup& other) const = default;
    bool operator<(const FgAbGroup& other) const;

    std::string to_string() const;  // canonical "Z+Z/2+Z/8" form

private:
    unsigned long free_rank_ = 0;
    std::vector<Int> factors_;  // ascending divisibility chain, entries >= 2
};

// Quotient of the free group on `m.rows()` generators by the columns of m.
FgAbGroup cokernel(const IntMatrix& m);

// Injective homomorphism a -> b exists? Finite groups only; decided by
// comparing p-primary exponent partitions coordinatewise.
bool embeds(const FgAbGroup& a, const FgAbGroup& b);

// All isomorphism classes of abelian groups of order n, deterministic order.
std::vector<FgAbGroup> abelian_groups_of_order(const Int& n);

// All isomorphism classes G fitting into 0 -> k -> G -> q -> 0.
// Finite inputs only. Always contains k + q.
std::vector<FgAbGroup> extension_candidates(const FgAbGroup& k, const FgAbGroup& q);

// Homomorphism between canonical-form groups: matrix columns give the
// images of domain generators in codomain generators (free generators
// first, then torsion generators ascending).
class GroupHom {
public:
    GroupHom(FgAbGroup domain, FgAbGroup codomain, IntMatrix matrix);

    static GroupHom zero(const FgAbGroup& domain, const FgAbGroup& codomain);
    static GroupHom identity(const FgAbGroup& g);
    // 1x1 convenience: cyclic domain/codomain, generator |-> value * generator.
    static GroupHom cyclic_map(const FgAbGroup& domain, const FgAbGroup& codomain, long value);

    const FgAbGroup& domain() const { return domain_; }
    const FgAbGroup& codomain() const { return codomain_; }
    // Entries reduced modulo the codomain relations (canonical representative).
    const IntMatrix& matrix() const { return matrix_; }

    GroupHom compose_after(const GroupHom& inner) const;  // this ∘ inner

    FgAbGroup kernel() const;
    FgAbGroup image() const;
    FgAbGroup cokernel() const;

    bool is_zero() const { return matrix_.is_zero(); }
    bool is_injective() const { return kernel().is_trivial(); }
    bool is_surjective() const { return cokernel().is_trivial(); }

    // Equality modulo codomain relations (presentations are not unique).
    bool operator==(const GroupHom& other) const;

    std::string to_string() const;

private:
    FgAbGroup domain_;
    FgAbGroup codomain_;
    IntMatrix matrix_;
};

struct KernelImageCokernel {
    FgAbGroup kernel;
    FgAbGroup image;
    FgAbGroup cokernel;
};

KernelImageCokernel kernel_image_cokernel(const GroupHom& f);

// Generators (columns, in domain generator coordinates) of the lattice of
// x with f(x) = 0 in the codomain. Contains the domain relations.
IntMatrix zero_preimage_lattice(const GroupHom& f);

// (torsion subgroup, free rank).
std::pair<FgAbGroup, unsigned long> torsion_and_rank(const FgAbGroup& g);

struct HomFlagsFilter {
    std::optional<bool> injective;
    std::optional<bool> surjective;
    std::optional<bool> zero;
    std::optional<FgAbGroup> kernel;
    std::optional<FgAbGroup> image;
};

// All homomorphisms a -> b passing the filter. Free-to-free matrix entries
// range over [-window, window]; entries into torsion generators are
// enumerated exactly. Throws UnsupportedCaseError past the size bounds
// (|torsion| <= 2^16, rank <= 2).
std::vector<GroupHom> enumerate_maps(const FgAbGroup& a, const FgAbGroup& b,
                                     const HomFlagsFilter& filter = {}, long window = 64);

// Automorphisms of a small finite group (by exhaustive filtering).
std::vector<GroupHom> automorphisms(const FgAbGroup& g);

// Deduplicate maps modulo postcomposition with codomain automorphisms.
std::vector<GroupHom> dedup_modulo_codomain_aut(const std::vector<GroupHom>& maps);

}  // namespace smithles::fgab
