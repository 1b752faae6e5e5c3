#include <gmpxx.h>
#include <random>

#include "doctest.h"
#include "smithles/bordismdb.hpp"
#include "smithles/solver.hpp"
#include "smithles/anderson.hpp"
#include "smithles/errors.hpp"

using namespace smithles::anderson;
using namespace smithles::fgab;
using namespace smithles::les;
using smithles::ContractError;

namespace {

FgAbGroup Z() { return FgAbGroup::free_group(1); }
FgAbGroup Zn(long n) { return FgAbGroup::cyclic(n); }
FgAbGroup O() { return FgAbGroup::trivial(); }

// Characters of a finite group as coefficient tuples; chi_i sends the
// i-th generator to 1/d_i in Q/Z. Pairing evaluated with exact rationals.
mpq_class evaluate(const FgAbGroup& g, const std::vector<Int>& chi, const std::vector<Int>& x) {
    mpq_class total = 0;
    const auto& d = g.invariant_factors();
    for (std::size_t i = 0; i < d.size(); ++i) {
        mpq_class term(chi[i] * x[i], d[i]);
        term.canonicalize();
        total += term;
    }
    // Reduce mod 1.
    mpz_class num = total.get_num(), den = total.get_den();
    mpz_class r = num % den;
    if (r < 0) r += den;
    mpq_class out(r, den);
    out.canonicalize();
    return out;
}

std::vector<std::vector<Int>> all_tuples(const FgAbGroup& g) {
    std::vector<std::vector<Int>> out{{}};
    for (const Int& d : g.invariant_factors()) {
        std::vector<std::vector<Int>> next;
        for (const auto& t : out)
            for (Int v = 0; v < d; ++v) {
                auto t2 = t;
                t2.push_back(v);
                next.push_back(t2);
            }
        out = next;
    }
    return out;
}

}  // namespace

TEST_CASE("graded group range checks") {
    GradedGroup g("test", {{0, Z()}, {1, Zn(2)}});
    CHECK(g.at(0) == Z());
    CHECK(g.at(1) == Zn(2));
    CHECK_THROWS_AS(g.at(2), ContractError);  // never silently zero
    CHECK_THROWS_AS((GradedGroup{"gap", {{0, Z()}, {2, Z()}}}), smithles::PresentationError);
}

TEST_CASE("anderson dual of single degrees") {
    GradedGroup pinp("Pin+", {{4, Zn(16)}, {5, O()}});
    DualizedGroup d = anderson_dual_degree(pinp, 4);
    CHECK(d.as_group() == Zn(16));
    CHECK(d.free_rank == 0);

    GradedGroup spin("Spin", {{-1, O()}, {0, Z()}});
    CHECK(anderson_dual_degree(spin, -1).as_group() == Z());

    GradedGroup spinz2("SpinZ2", {{3, Zn(8)}, {4, Z()}});
    DualizedGroup d3 = anderson_dual_degree(spinz2, 3);
    CHECK(d3.as_group() == Z().direct_sum(Zn(8)));
    CHECK(d3.torsion_part == Zn(8));
    CHECK(d3.free_rank == 1);

    SUBCASE("torsion order matches the torsion of the input degree") {
        CHECK(*d.torsion_part.order() == 16);
        CHECK(*d3.torsion_part.order() == 8);
    }
    SUBCASE("the anomaly convention shifts one degree up") {
        GradedGroup g("G", {{3, Zn(8)}, {4, Z()}, {5, Zn(3)}});
        DualizedGroup a = anderson_dual_degree(g, 3, Convention::SigmaNPlus2);
        CHECK(a.torsion_part.is_trivial());  // Tors(G_4) = 0
        CHECK(a.free_rank == 0);             // rank(G_5) = 0
    }
    SUBCASE("out of range is an error") {
        CHECK_THROWS_AS(anderson_dual_degree(pinp, 5), ContractError);
    }
}

TEST_CASE("dualize_map") {
    SUBCASE("torsion pairing pullback of Z/4 -> Z/8, 1 |-> 2") {
        GroupHom f = GroupHom::cyclic_map(Zn(4), Zn(8), 2);
        DualizedMap d = dualize_map(f);
        CHECK(d.torsion_dual == GroupHom::cyclic_map(Zn(8), Zn(4), 1));
    }
    SUBCASE("identity dualizes to identity blocks") {
        FgAbGroup g = Z().direct_sum(Zn(2));
        DualizedMap d = dualize_map(GroupHom::identity(g));
        CHECK(d.free_dual == GroupHom::identity(Z()));
        CHECK(d.torsion_dual == GroupHom::identity(Zn(2)));
    }
    SUBCASE("zero map dualizes to zero blocks") {
        DualizedMap d = dualize_map(GroupHom::zero(Zn(6), Zn(10)));
        CHECK(d.torsion_dual.is_zero());
    }
    SUBCASE("free dual transposes: multiplication by 2 on Z stays itself") {
        DualizedMap d = dualize_map(GroupHom::cyclic_map(Z(), Z(), 2));
        CHECK(d.free_dual == GroupHom::cyclic_map(Z(), Z(), 2));
    }
}

TEST_CASE("torsion duality against brute-force character pairing") {
    // chi(f(x)) == (dual f)(chi)(x) for every character and element, on
    // every pair of abelian groups of order <= 12 and every hom.
    std::vector<FgAbGroup> groups;
    for (long n = 1; n <= 12; ++n)
        for (const auto& g : abelian_groups_of_order(n)) groups.push_back(g);
    for (const auto& a : groups)
        for (const auto& b : groups) {
            auto maps = enumerate_maps(a, b);
            for (std::size_t mi = 0; mi < maps.size(); mi += 2) {
                const GroupHom& f = maps[mi];
                DualizedMap d = dualize_map(f);
                for (const auto& chi : all_tuples(b))
                    for (const auto& x : all_tuples(a)) {
                        std::vector<Int> fx = f.matrix().apply(x);
                        std::vector<Int> dchi = d.torsion_dual.matrix().apply(chi);
                        CHECK(evaluate(b, chi, fx) == evaluate(a, dchi, x));
                    }
            }
        }
}

TEST_CASE("torsion double duality on all abelian groups of order <= 64") {
    std::vector<FgAbGroup> groups;
    for (long n = 1; n <= 64; ++n)
        for (const auto& g : abelian_groups_of_order(n)) groups.push_back(g);
    // Double-dualizing a hom returns the original matrix under the
    // canonical identifications (sampled homs between random pairs).
    std::mt19937 rng(0xC0FFEE ^ 5);
    std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
    int checked = 0;
    while (checked < 300) {
        const FgAbGroup& a = groups[pick(rng)];
        const FgAbGroup& b = groups[pick(rng)];
        std::vector<GroupHom> maps;
        try {
            maps = enumerate_maps(a, b);
        } catch (const smithles::UnsupportedCaseError&) {
            continue;
        }
        for (std::size_t mi = 0; mi < maps.size(); mi += 7) {
            const GroupHom& f = maps[mi];
            GroupHom dd = dualize_map(dualize_map(f).torsion_dual).torsion_dual;
            CHECK(dd == f);
            ++checked;
        }
    }
}

TEST_CASE("dualize_les") {
    SUBCASE("a window of zero groups dualizes to a window of zero groups") {
        ExactSequence primal;
        for (int i = 0; i < 4; ++i)
            primal.nodes.push_back({3 - i, "A", NodeState::known(O())});
        primal.edges.resize(3);
        std::map<std::string, GradedGroup> cols{
            {"A", GradedGroup("A", {{-1, O()}, {0, O()}, {1, O()}, {2, O()}, {3, O()}, {4, O()}})}};
        DualizedLes dual = dualize_les(primal, cols);
        for (const auto& n : dual.sequence.nodes) CHECK(n.state.group().is_trivial());
    }
    SUBCASE("a known map in adjacent degrees contributes its transpose") {
        // Primal window: A@2 = Z -x2-> B@2 = Z; duals at degree 1 get free
        // parts from degree 2 and the dual edge is again x2.
        ExactSequence primal;
        primal.nodes.push_back({2, "A", NodeState::known(Z())});
        primal.nodes.push_back({2, "B", NodeState::known(Z())});
        primal.nodes.push_back({1, "A", NodeState::known(O())});
        primal.nodes.push_back({1, "B", NodeState::known(O())});
        primal.edges.resize(3);
        primal.edges[0].state = EdgeState::known_map(GroupHom::cyclic_map(Z(), Z(), 2));
        primal.edges[0].name = "f";
        std::map<std::string, GradedGroup> cols{
            {"A", GradedGroup("A", {{1, O()}, {2, Z()}, {3, O()}})},
            {"B", GradedGroup("B", {{1, O()}, {2, Z()}, {3, O()}})}};
        DualizedLes dual = dualize_les(primal, cols);
        REQUIRE(dual.sequence.nodes.size() == 4);
        // Reversed order: IZ^1(B), IZ^1(A), IZ^2(B), IZ^2(A); the free
        // parts at degree 1 come from the rank of degree 2.
        CHECK(dual.sequence.nodes[0].state.group() == Z());
        CHECK(dual.sequence.nodes[1].state.group() == Z());
        CHECK(dual.sequence.nodes[2].state.group() == O());
        CHECK(dual.sequence.nodes[3].state.group() == O());
        const auto& first = dual.sequence.edges[0];
        REQUIRE(first.state.kind() == EdgeState::Kind::KnownMap);
        CHECK(first.state.map() == GroupHom::cyclic_map(Z(), Z(), 2));
    }
    SUBCASE("exactness transports through duals of finite windows") {
        // 0 -> Z/4 -> Z/8 -> Z/2 -> 0, all in one degree band.
        ExactSequence primal;
        primal.nodes.push_back({1, "A", NodeState::known(O())});
        primal.nodes.push_back({1, "B", NodeState::known(Zn(4))});
        primal.nodes.push_back({0, "C", NodeState::known(Zn(8))});
        primal.nodes.push_back({0, "A", NodeState::known(Zn(2))});
        primal.nodes.push_back({0, "B", NodeState::known(O())});
        primal.edges.resize(4);
        primal.edges[0].state = EdgeState::known_map(GroupHom::zero(O(), Zn(4)));
        primal.edges[1].state = EdgeState::known_map(GroupHom::cyclic_map(Zn(4), Zn(8), 2));
        primal.edges[2].state = EdgeState::known_map(GroupHom::cyclic_map(Zn(8), Zn(2), 1));
        primal.edges[3].state = EdgeState::known_map(GroupHom::zero(Zn(2), O()));
        REQUIRE(check_exact(primal).all_exact);
        std::map<std::string, GradedGroup> cols{
            {"A", GradedGroup("A", {{0, Zn(2)}, {1, O()}, {2, O()}})},
            {"B", GradedGroup("B", {{0, O()}, {1, Zn(4)}, {2, O()}})},
            {"C", GradedGroup("C", {{0, Zn(8)}, {1, O()}})}};
        DualizedLes dual = dualize_les(primal, cols);
        for (const auto& e : dual.sequence.edges)
            REQUIRE(e.state.kind() == EdgeState::Kind::KnownMap);
        CHECK(check_exact(dual.sequence).all_exact);
    }
    SUBCASE("partial primal input is rejected") {
        ExactSequence primal;
        primal.nodes.push_back({0, "A", NodeState::unknown()});
        CHECK_THROWS_AS(dualize_les(primal, {}), ContractError);
    }
}

TEST_CASE("the completed pin window dualizes to an exact sequence") {
    // Solve the all-finite pin window with its two pinned maps, dualize
    // the fully known result, and check exactness transports.
    auto db = smithles::bordismdb::Database::load(SMITHLES_SEED_PATH);
    ExactSequence primal = db.build_les("pinm-to-pinp", 5, 0);
    std::vector<SideConstraint> constraints = {
        SideConstraint::map_equals(9, GroupHom::cyclic_map(Zn(4), Zn(8), 2)),
    };
    SolveResult solved = solve(primal, constraints);
    REQUIRE(solved.ok());
    for (const auto& e : solved.sequence.edges)
        REQUIRE(e.state.kind() == EdgeState::Kind::KnownMap);
    REQUIRE(check_exact(solved.sequence).all_exact);

    DualizedLes dual =
        dualize_les(solved.sequence, db.recipe_columns("pinm-to-pinp"));
    for (const auto& e : dual.sequence.edges)
        REQUIRE(e.state.kind() == EdgeState::Kind::KnownMap);
    CHECK(check_exact(dual.sequence).all_exact);
}
