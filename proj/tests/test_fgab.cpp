#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "smithles/errors.hpp"
#include "smithles/fgab.hpp"

using namespace smithles::fgab;
using smithles::PresentationError;
using smithles::UnsupportedCaseError;

namespace {

FgAbGroup Z() { return FgAbGroup::free_group(1); }
FgAbGroup Zn(long n) { return FgAbGroup::cyclic(n); }

}  // namespace

TEST_CASE("canonical form") {
    CHECK(FgAbGroup(0, {Int(4), Int(6)}) == FgAbGroup(0, {Int(2), Int(12)}));
    CHECK(FgAbGroup(0, {Int(2), Int(3)}) == Zn(6));
    CHECK(FgAbGroup(1, {Int(1)}) == Z());
    CHECK(FgAbGroup(0, {Int(0)}) == Z());
    SUBCASE("idempotent") {
        FgAbGroup g(2, {Int(2), Int(8), Int(3)});
        FgAbGroup again(g.free_rank(), g.invariant_factors());
        CHECK(g == again);
    }
    SUBCASE("divisibility chain") {
        FgAbGroup g(0, {Int(4), Int(6), Int(10)});
        const auto& f = g.invariant_factors();
        for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
        Int order = 1;
        for (const auto& d : f) order *= d;
        CHECK(order == 240);
    }
}

TEST_CASE("cokernel") {
    CHECK(cokernel(IntMatrix::from_rows({{2}})) == Zn(2));
    CHECK(cokernel(IntMatrix::from_rows({{2, 0}, {0, 0}})) == Z().direct_sum(Zn(2)));
    // Relation matrix whose SNF is diag(1,4,0): unit factor drops, zero row
    // contributes rank.
    IntMatrix m = IntMatrix::from_rows({{1, 0, 0}, {0, 4, 0}, {0, 0, 0}});
    CHECK(cokernel(m) == Z().direct_sum(Zn(4)));
}

TEST_CASE("kernel, image, cokernel of the -a+2b map") {
    FgAbGroup dom = Z().direct_sum(Zn(8));
    FgAbGroup cod = Zn(16);
    GroupHom f(dom, cod, IntMatrix::from_rows({{-1, 2}}));
    auto kic = kernel_image_cokernel(f);
    CHECK(kic.kernel == Z());
    CHECK(kic.image == Zn(16));
    CHECK(kic.cokernel.is_trivial());

    SUBCASE("oracle: enumerate -a+2b mod 16 over a in 0..15, b in 0..7") {
        std::set<long> values;
        for (long a = 0; a < 16; ++a)
            for (long b = 0; b < 8; ++b) values.insert((((-a + 2 * b) % 16) + 16) % 16);
        CHECK(values.size() == 16);
    }
}

TEST_CASE("kernel, image, cokernel of small maps") {
    SUBCASE("Z/4 -> Z/8, 1 |-> 2") {
        GroupHom f = GroupHom::cyclic_map(Zn(4), Zn(8), 2);
        auto kic = kernel_image_cokernel(f);
        CHECK(kic.kernel.is_trivial());
        CHECK(kic.image == Zn(4));
        CHECK(kic.cokernel == Zn(2));
    }
    SUBCASE("zero map Z/6 -> Z/10") {
        GroupHom f = GroupHom::zero(Zn(6), Zn(10));
        auto kic = kernel_image_cokernel(f);
        CHECK(kic.kernel == Zn(6));
        CHECK(kic.image.is_trivial());
        CHECK(kic.cokernel == Zn(10));
    }
    SUBCASE("multiplication by 2 on Z") {
        GroupHom f = GroupHom::cyclic_map(Z(), Z(), 2);
        CHECK(f.kernel().is_trivial());
        CHECK(f.image() == Z());
        CHECK(f.cokernel() == Zn(2));
    }
}

TEST_CASE("hom validation and equality modulo codomain relations") {
    CHECK_THROWS_AS(GroupHom(Zn(2), Z(), IntMatrix::from_rows({{1}})), PresentationError);
    CHECK_THROWS_AS(GroupHom(Zn(4), Zn(8), IntMatrix::from_rows({{1}})), PresentationError);
    GroupHom a = GroupHom::cyclic_map(Zn(4), Zn(8), 2);
    GroupHom b = GroupHom::cyclic_map(Zn(4), Zn(8), 10);
    CHECK(a == b);
}

TEST_CASE("order bookkeeping |dom| = |ker| * |im| on random homs") {
    std::mt19937 rng(0xC0FFEE ^ 1);
    std::vector<FgAbGroup> pool = {Zn(2),  Zn(4),           Zn(8),
                                   Zn(6),  Zn(9),           Zn(2).direct_sum(Zn(4)),
                                   Zn(12), Zn(3).direct_sum(Zn(3))};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const FgAbGroup& a = pool[pick(rng)];
        const FgAbGroup& b = pool[pick(rng)];
        auto maps = enumerate_maps(a, b);
        for (std::size_t idx = 0; idx < maps.size(); idx += 3) {
            auto kic = kernel_image_cokernel(maps[idx]);
            CHECK(*a.order() == *kic.kernel.order() * *kic.image.order());
            CHECK(*b.order() == *kic.image.order() * *kic.cokernel.order());
            ++checked;
        }
        if (checked > 400) break;
    }
    CHECK(checked > 50);
}

TEST_CASE("torsion_and_rank") {
    auto [t1, r1] = torsion_and_rank(Z().direct_sum(Zn(8)));
    CHECK(t1 == Zn(8));
    CHECK(r1 == 1);
    auto [t2, r2] = torsion_and_rank(Z());
    CHECK(t2.is_trivial());
    CHECK(r2 == 1);
    auto [t3, r3] = torsion_and_rank(Zn(2).direct_sum(Zn(2)));
    CHECK(t3 == Zn(2).direct_sum(Zn(2)));
    CHECK(r3 == 0);
}

TEST_CASE("embeds") {
    CHECK(embeds(Zn(4), Zn(8)));
    CHECK_FALSE(embeds(Zn(2).direct_sum(Zn(2)), Zn(8)));
    CHECK(embeds(FgAbGroup::trivial(), Zn(7)));
    CHECK_THROWS_AS(embeds(Z(), Zn(2)), UnsupportedCaseError);

    SUBCASE("agrees with brute force on groups of order <= 16") {
        std::vector<FgAbGroup> groups;
        for (long n = 1; n <= 16; ++n)
            for (const auto& g : abelian_groups_of_order(n)) groups.push_back(g);
        for (const auto& a : groups)
            for (const auto& b : groups) {
                if (*a.order() > *b.order()) continue;
                CHECK(embeds(a, b) == oracles::embeds_brute_force(a, b));
            }
    }
    SUBCASE("reflexive, transitive, antisymmetric at equal order") {
        for (long n : {8L, 12L, 16L}) {
            auto groups = abelian_groups_of_order(n);
            for (const auto& a : groups) {
                CHECK(embeds(a, a));
                for (const auto& b : groups)
                    if (embeds(a, b) && embeds(b, a)) CHECK(a == b);
            }
        }
    }
}

TEST_CASE("extension_candidates") {
    using V = std::vector<FgAbGroup>;
    CHECK(extension_candidates(Zn(2), Zn(2)) ==
          V{Zn(2).direct_sum(Zn(2)), Zn(4)});
    CHECK(extension_candidates(Zn(2), FgAbGroup::trivial()) == V{Zn(2)});
    CHECK(extension_candidates(Zn(4), Zn(2)) ==
          V{Zn(2).direct_sum(Zn(4)), Zn(8)});

    SUBCASE("always contains the split extension") {
        std::vector<FgAbGroup> pool = {Zn(2), Zn(4), Zn(6), Zn(2).direct_sum(Zn(2)), Zn(9)};
        for (const auto& k : pool)
            for (const auto& q : pool) {
                auto cands = extension_candidates(k, q);
                FgAbGroup split = k.direct_sum(q);
                CHECK(std::find(cands.begin(), cands.end(), split) != cands.end());
            }
    }
    SUBCASE("agrees with brute force on small inputs") {
        std::vector<FgAbGroup> pool = {Zn(2), Zn(3), Zn(4), Zn(2).direct_sum(Zn(2)), Zn(6)};
        for (const auto& k : pool)
            for (const auto& q : pool) {
                if (*k.order() * *q.order() > 24) continue;
                CHECK(extension_candidates(k, q) == oracles::extensions_brute_force(k, q));
            }
    }
}

TEST_CASE("enumerate_maps") {
    SUBCASE("Hom(Z/2, Z/4) has two elements") {
        auto maps = enumerate_maps(Zn(2), Zn(4));
        CHECK(maps.size() == 2);
    }
    SUBCASE("surjections Z/4 -> Z/8 do not exist") {
        HomFlagsFilter f;
        f.surjective = true;
        CHECK(enumerate_maps(Zn(4), Zn(8), f).empty());
    }
    SUBCASE("surjective maps Z+Z/8 -> Z/16 with kernel Z contain -a+2b") {
        HomFlagsFilter f;
        f.surjective = true;
        f.kernel = Z();
        auto maps = enumerate_maps(Z().direct_sum(Zn(8)), Zn(16), f);
        CHECK_FALSE(maps.empty());
        GroupHom wanted(Z().direct_sum(Zn(8)), Zn(16), IntMatrix::from_rows({{-1, 2}}));
        CHECK(std::find(maps.begin(), maps.end(), wanted) != maps.end());
    }
    SUBCASE("composition is associative") {
        GroupHom f = GroupHom::cyclic_map(Zn(4), Zn(8), 2);
        GroupHom g = GroupHom::cyclic_map(Zn(8), Zn(4), 1);
        GroupHom h = GroupHom::cyclic_map(Zn(4), Zn(2), 1);
        CHECK(h.compose_after(g.compose_after(f)) == h.compose_after(g).compose_after(f));
    }
}

TEST_CASE("automorphisms and dedup") {
    CHECK(automorphisms(Zn(16)).size() == 8);
    CHECK(automorphisms(Zn(2).direct_sum(Zn(2))).size() == 6);
    auto maps = enumerate_maps(Zn(2), Zn(4));
    auto reps = dedup_modulo_codomain_aut(maps);
    CHECK(reps.size() == 2);  // zero map and the embedding are inequivalent
}
