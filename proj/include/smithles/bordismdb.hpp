#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "smithles/anderson.hpp"
#include "smithles/les.hpp"

namespace smithles::bordismdb {

// One named graded bordism theory; every stored degree carries a
// provenance string naming the source of the value.
struct DbEntry {
    std::string name;
    anderson::GradedGroup groups;
    std::map<int, std::string> provenance;
};

struct RecipeColumn {
    std::string label;  // display label in windows and tables
    std::string entry;  // database entry name
};

// A named Smith window: three columns cycling A -> B -> C with C shifted
// down by the codimension, rows from top_degree to bottom_degree.
struct Recipe {
    std::string name;
    unsigned codimension = 0;
    std::array<RecipeColumn, 3> columns;
    int top_degree = 0;
    int bottom_degree = 0;
    std::set<std::pair<std::size_t, int>> unknowns;  // (column index, degree) marked "?"
    std::array<std::string, 3> edge_names{"p", "sm", "delta"};
    // Edges that are scalar multiplication by construction (e.g. the
    // multiplication-by-2 window): position within the row -> scalar.
    std::map<std::size_t, long> scalar_edges;
};

class Database {
public:
    static Database load(const std::string& path);
    static Database from_text(const std::string& text);
    void save(const std::string& path) const;
    std::string to_text() const;

    const DbEntry& entry(const std::string& name) const;
    const Recipe& recipe(const std::string& name) const;
    std::vector<std::string> entry_names() const;
    std::vector<std::string> recipe_names() const;
    bool has_entry(const std::string& name) const { return entries_.count(name) > 0; }

    // Assemble a recipe's window with Known nodes from the stored groups;
    // cells marked "?" become Unknown; any other gap is an error listing
    // the missing degrees. The second form overrides the degree range.
    les::ExactSequence build_les(const std::string& recipe_name) const;
    les::ExactSequence build_les(const std::string& recipe_name, int top, int bottom) const;

    // Column label -> graded data, for Anderson dualization of a recipe.
    std::map<std::string, anderson::GradedGroup> recipe_columns(
        const std::string& recipe_name) const;

    void add_entry(DbEntry e);
    void add_recipe(Recipe r);

private:
    std::map<std::string, DbEntry> entries_;
    std::map<std::string, Recipe> recipes_;
};

}  // namespace smithles::bordismdb
