#include <fstream>

#include "doctest.h"
#include "smithles/bordismdb.hpp"
#include "smithles/group_expr.hpp"
#include "smithles/errors.hpp"
#include "smithles/solver.hpp"

using namespace smithles::bordismdb;
using namespace smithles::fgab;
using namespace smithles::les;
using smithles::PresentationError;

namespace {

Database seed() { return Database::load(SMITHLES_SEED_PATH); }

FgAbGroup G(const std::string& s) { return smithles::fgab::parse_group(s); }

}  // namespace

TEST_CASE("seed database loads and validates") {
    Database db = seed();
    CHECK(db.entry_names().size() == 8);
    CHECK(db.recipe_names().size() == 4);

    SUBCASE("Pin- degrees 0..6") {
        const auto& e = db.entry("Pin-");
        std::vector<std::string> expect = {"Z/2", "Z/2", "Z/8", "0", "0", "0", "Z/16"};
        for (int d = 0; d <= 6; ++d) CHECK(e.groups.at(d) == G(expect[d]));
    }
    SUBCASE("Pin+ degrees 0..4") {
        const auto& e = db.entry("Pin+");
        std::vector<std::string> expect = {"Z/2", "0", "Z/2", "Z/2", "Z/16"};
        for (int d = 0; d <= 4; ++d) CHECK(e.groups.at(d) == G(expect[d]));
    }
    SUBCASE("every degree carries provenance") {
        for (const auto& name : db.entry_names()) {
            const auto& e = db.entry(name);
            for (const auto& [d, g] : e.groups.groups()) {
                REQUIRE(e.provenance.count(d));
                CHECK_FALSE(e.provenance.at(d).empty());
            }
        }
    }
}

TEST_CASE("seed database round-trips byte-identically") {
    Database db = seed();
    std::string once = db.to_text();
    Database again = Database::from_text(once);
    CHECK(again.to_text() == once);

    SUBCASE("through the filesystem as well") {
        std::string path = "roundtrip_tmp_db.json";
        db.save(path);
        Database loaded = Database::load(path);
        CHECK(loaded.to_text() == once);
        std::remove(path.c_str());
    }
}

TEST_CASE("schema violations are rejected") {
    CHECK_THROWS_AS(Database::from_text("{"), PresentationError);
    CHECK_THROWS_AS(Database::from_text(R"({"entries": [
        {"name": "X", "groups": {"0": "Z/1"}, "provenance": {"0": "p"}}]})"),
                    PresentationError);
    CHECK_THROWS_AS(Database::from_text(R"({"entries": [
        {"name": "X", "groups": {"0": "Z"}, "provenance": {}}]})"),
                    PresentationError);
    CHECK_THROWS_AS(Database::from_text(R"({"entries": [
        {"name": "X", "groups": {"0": "Z"}, "provenance": {"0": "p"}},
        {"name": "X", "groups": {"0": "Z"}, "provenance": {"0": "p"}}]})"),
                    PresentationError);
}

TEST_CASE("Peterson splitting consistency of the seeded SpinZ2 column") {
    Database db = seed();
    const auto& spin = db.entry("Spin").groups;
    const auto& pinm = db.entry("Pin-").groups;
    const auto& spinz2 = db.entry("SpinZ2").groups;
    for (const auto& [n, g] : spinz2.groups()) {
        if (!spin.in_range(n) || !pinm.in_range(n - 1)) continue;
        CHECK(g == spin.at(n).direct_sum(pinm.at(n - 1)));
    }
}

TEST_CASE("build_les assembles recipe windows") {
    Database db = seed();
    SUBCASE("spin-times-2 matches the figure layout") {
        ExactSequence seq = db.build_les("spin-times-2");
        REQUIRE(seq.nodes.size() == 21);  // rows 5..-1, three columns
        CHECK(seq.nodes[0].degree == 5);
        CHECK(seq.nodes[0].state.group().is_trivial());
        // Row k=4: Z, Z, Z/2.
        CHECK(seq.nodes[3].state.group() == G("Z"));
        CHECK(seq.nodes[4].state.group() == G("Z"));
        CHECK(seq.nodes[5].state.group() == G("Z/2"));
        // The x2 edges are part of the recipe.
        REQUIRE(seq.edges[3].state.kind() == EdgeState::Kind::KnownMap);
        CHECK(seq.edges[3].state.map() == GroupHom::cyclic_map(G("Z"), G("Z"), 2));
        CHECK(seq.edges[3].name == "x2");
    }
    SUBCASE("pinm-to-pinp carries the shifted third column") {
        ExactSequence seq = db.build_les("pinm-to-pinp");
        REQUIRE(seq.nodes.size() == 21);  // rows 6..0
        CHECK(seq.nodes[0].degree == 6);
        CHECK(seq.nodes[2].degree == 4);   // Pin+ shifted by the codimension 2
        CHECK(seq.nodes[2].state.group() == G("Z/16"));
        CHECK(seq.nodes[20].degree == -2);
        CHECK(seq.nodes[20].state.group().is_trivial());
    }
    SUBCASE("spinh window marks the unseeded cells unknown") {
        ExactSequence seq = db.build_les("spinh");
        REQUIRE(seq.nodes.size() == 9);
        CHECK(seq.nodes[0].state.kind() == NodeState::Kind::Unknown);
        CHECK(seq.nodes[3].state.group() == G("Z+Z"));
        CHECK(seq.nodes[4].state.group() == G("Z+Z"));
        CHECK(seq.nodes[5].state.group() == G("Z/2"));
        CHECK(seq.nodes[6].state.group().is_trivial());
    }
    SUBCASE("a gap without a ? marker is an error listing the gaps") {
        Database db2 = seed();
        Recipe r;
        r.name = "broken";
        r.codimension = 0;
        r.columns = {RecipeColumn{"Spin", "Spin"}, RecipeColumn{"Spin", "Spin"},
                     RecipeColumn{"Spin", "Spin"}};
        r.top_degree = 9;
        r.bottom_degree = 8;
        db2.add_recipe(r);
        CHECK_THROWS_WITH_AS(db2.build_les("broken"),
                             doctest::Contains("missing"), PresentationError);
    }
}

TEST_CASE("every seeded recipe solves without contradiction") {
    Database db = seed();
    for (const auto& name : db.recipe_names()) {
        ExactSequence seq = db.build_les(name);
        SolveResult r = solve(seq);
        CHECK_MESSAGE(r.ok(), "recipe ", name, ": ", r.report());
    }
}
