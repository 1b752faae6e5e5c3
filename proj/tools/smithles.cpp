// smithles: Smith long exact sequences at the level of group data.
// Subcommands wire the engine together: periodicity of twisted structures,
// exactness solving for sequence windows, Anderson-dualized tables, and
// the bordism database.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "smithles/anderson.hpp"
#include "smithles/bordismdb.hpp"
#include "smithles/bundles.hpp"
#include "smithles/errors.hpp"
#include "smithles/graded_ring.hpp"
#include "smithles/group_expr.hpp"
#include "smithles/seqfile.hpp"
#include "smithles/solver.hpp"
#include "smithles/structures.hpp"
#include "smithles/table.hpp"

namespace {

using namespace smithles;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::string resolve_db_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SMITHLES_DB")) return env;
    throw ContractError("no database given (use --db PATH or set SMITHLES_DB)");
}

std::string node_display(const les::NodeState& s) {
    switch (s.kind()) {
        case les::NodeState::Kind::Known:
            return s.group().to_string();
        case les::NodeState::Kind::Candidates: {
            std::string out = "{";
            for (std::size_t i = 0; i < s.candidate_set().size(); ++i)
                out += (i ? " | " : "") + s.candidate_set()[i].to_string();
            return out + "}";
        }
        case les::NodeState::Kind::OrderConstrained: {
            if (s.allowed_orders().empty()) return "finite";
            std::string out = "order in {";
            for (std::size_t i = 0; i < s.allowed_orders().size(); ++i)
                out += (i ? "," : "") + s.allowed_orders()[i].get_str();
            return out + "}";
        }
        case les::NodeState::Kind::Unknown:
            return "?";
    }
    return "?";
}

// Three-column periodic layout with degree labels, matching the way the
// windows are drawn.
tables::Table window_table(const les::ExactSequence& seq) {
    tables::Table t;
    t.headers = {"deg"};
    for (std::size_t c = 0; c < 3 && c < seq.nodes.size(); ++c)
        t.headers.push_back(seq.nodes[c].label.empty() ? "col" + std::to_string(c)
                                                       : seq.nodes[c].label);
    for (std::size_t i = 0; i < seq.nodes.size(); i += 3) {
        std::vector<std::string> row{std::to_string(seq.nodes[i].degree)};
        for (std::size_t c = 0; c < 3 && i + c < seq.nodes.size(); ++c)
            row.push_back(node_display(seq.nodes[i + c].state));
        t.rows.push_back(std::move(row));
    }
    return t;
}

int cmd_period(const std::string& structure, const std::string& base, const std::string& bundle,
               unsigned long bound, const std::string& format) {
    gradedalg::Structure s = gradedalg::structure_by_name(structure);
    gradedalg::Base b = gradedalg::base_by_name(base);
    gradedalg::BundleExpr w = gradedalg::parse_bundle(b, bundle);
    gradedalg::PeriodResult r = gradedalg::smith_period(s, w, bound);

    tables::Table trace;
    trace.headers = {"k", "bundle", "classes", "lifts"};
    for (const auto& row : r.trace) {
        std::string classes;
        for (const auto& c : row.checks) {
            if (!classes.empty()) classes += ", ";
            classes += c.label + (c.vanishes ? " = 0" : " != 0");
        }
        if (classes.empty()) classes = "no obstruction";
        trace.rows.push_back({std::to_string(row.k), w.scaled(row.k).to_string(), classes,
                              row.lifts ? "yes" : "no"});
    }
    if (format == "json") {
        nlohmann::json out;
        out["structure"] = gradedalg::structure_name(s);
        out["base"] = gradedalg::base_info(b).name;
        out["bundle"] = w.to_string();
        if (r.period)
            out["period"] = *r.period;
        else
            out["period"] = "exceeds bound";
        out["trace"] = nlohmann::json::array();
        for (const auto& row : r.trace) {
            nlohmann::json jr{{"k", row.k}, {"lifts", row.lifts}};
            for (const auto& c : row.checks) jr["classes"][c.label] = c.vanishes;
            out["trace"].push_back(jr);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << tables::render(trace, tables::format_by_name(format));
        if (r.period)
            std::cout << "period: " << *r.period << "\n";
        else
            std::cout << "period: exceeds bound " << bound << "\n";
    }
    return kExitOk;  // "exceeds bound" is a reported answer, not a failure
}

int cmd_sw(const std::string& base, const std::string& bundle, unsigned truncate) {
    gradedalg::Base b = gradedalg::base_by_name(base);
    gradedalg::BundleExpr w = gradedalg::parse_bundle(b, bundle);
    std::cout << "w(" << w.to_string() << ") = "
              << gradedalg::total_sw(w, truncate).to_string() << "\n";
    return kExitOk;
}

int cmd_james(unsigned long upto, const std::string& format) {
    tables::Table t;
    t.headers = {"k", "phi(k)", "period 2^phi(k)"};
    for (unsigned long k = 1; k <= upto; ++k)
        t.rows.push_back({std::to_string(k), std::to_string(gradedalg::adams_phi(k)),
                          gradedalg::james_period(k).get_str()});
    std::cout << tables::render(t, tables::format_by_name(format));
    return kExitOk;
}

int cmd_les_solve(const std::string& input, const std::string& constraints_path,
                  const std::string& format) {
    les::SequenceDocument doc = les::load_sequence_file(input);
    if (doc.sequence.nodes.empty()) {
        std::cerr << "error: sequence file has no nodes\n";
        return kExitUsage;
    }
    if (!constraints_path.empty()) {
        les::SequenceDocument extra = les::load_sequence_file(constraints_path);
        for (auto& c : extra.constraints) doc.constraints.push_back(std::move(c));
    }
    les::SolveResult r = les::solve(doc.sequence, doc.constraints);
    if (format == "json") {
        les::SequenceDocument out{r.sequence, doc.constraints};
        std::cout << les::print_sequence_document(out);
    } else {
        std::cout << tables::render(window_table(r.sequence), tables::format_by_name(format));
    }
    std::cerr << r.report();
    return r.ok() ? kExitOk : kExitDomain;
}

int cmd_sbles(const std::string& db_path, const std::string& recipe,
              std::optional<int> top, std::optional<int> bottom, const std::string& format,
              const std::string& convention) {
    bordismdb::Database db = bordismdb::Database::load(resolve_db_path(db_path));
    const bordismdb::Recipe& r = db.recipe(recipe);
    // The top primal row is consumed producing free parts one degree up.
    int use_top = top ? *top : r.top_degree - 1;
    int use_bottom = bottom ? *bottom : r.bottom_degree;
    les::ExactSequence primal = db.build_les(recipe, use_top, use_bottom);
    for (const auto& n : primal.nodes)
        if (n.state.kind() != les::NodeState::Kind::Known)
            throw PresentationError("recipe window has unknown cells; sbles needs full data");
    anderson::Convention conv = convention == "n+2" ? anderson::Convention::SigmaNPlus2
                                                    : anderson::Convention::SigmaNPlus1;
    anderson::DualizedLes dual = anderson::dualize_les(primal, db.recipe_columns(recipe), conv);

    tables::Table t;
    t.headers = {"k"};
    for (std::size_t c = 0; c < 3 && c < dual.sequence.nodes.size(); ++c) {
        int shift = dual.sequence.nodes[c].degree -
                    (c + 1 < dual.sequence.nodes.size() ? dual.sequence.nodes[1].degree
                                                        : dual.sequence.nodes[c].degree);
        std::string deg = shift == 0 ? "k" : ("k" + std::to_string(shift));
        t.headers.push_back(dual.sequence.nodes[c].label + "^" + deg);
    }
    for (std::size_t i = 0; i + 2 < dual.sequence.nodes.size() + 1 &&
                            i < dual.sequence.nodes.size(); i += 3) {
        std::vector<std::string> row{std::to_string(dual.sequence.nodes[
            i + 1 < dual.sequence.nodes.size() ? i + 1 : i].degree)};
        for (std::size_t c = 0; c < 3 && i + c < dual.sequence.nodes.size(); ++c)
            row.push_back(node_display(dual.sequence.nodes[i + c].state));
        t.rows.push_back(std::move(row));
    }
    std::cout << tables::render(t, tables::format_by_name(format));
    for (const auto& w : dual.warnings) std::cerr << "note: " << w << "\n";
    return kExitOk;
}

int cmd_anderson(const std::string& db_path, const std::string& entry, int degree,
                 const std::string& convention) {
    bordismdb::Database db = bordismdb::Database::load(resolve_db_path(db_path));
    anderson::Convention conv = convention == "n+2" ? anderson::Convention::SigmaNPlus2
                                                    : anderson::Convention::SigmaNPlus1;
    anderson::DualizedGroup d =
        anderson::anderson_dual_degree(db.entry(entry).groups, degree, conv);
    std::cout << "IZ^" << degree << "(" << entry << ") = " << d.to_string()
              << "  (torsion " << d.torsion_part.to_string() << ", free rank " << d.free_rank
              << ")\n";
    return kExitOk;
}

int cmd_db(const std::string& db_path, const std::string& action, const std::string& name,
           const std::string& format) {
    bordismdb::Database db = bordismdb::Database::load(resolve_db_path(db_path));
    if (action == "validate") {
        std::cout << "ok: " << db.entry_names().size() << " entries, "
                  << db.recipe_names().size() << " recipes\n";
        return kExitOk;
    }
    if (action == "list") {
        tables::Table t;
        t.headers = {"entry", "degrees"};
        for (const auto& n : db.entry_names()) {
            const auto& e = db.entry(n);
            t.rows.push_back({n, std::to_string(e.groups.lowest_degree()) + ".." +
                                     std::to_string(e.groups.highest_degree())});
        }
        std::cout << tables::render(t, tables::format_by_name(format));
        tables::Table rt;
        rt.headers = {"recipe", "columns", "degrees"};
        for (const auto& n : db.recipe_names()) {
            const auto& r = db.recipe(n);
            rt.rows.push_back({n,
                               r.columns[0].label + " -> " + r.columns[1].label + " -> " +
                                   r.columns[2].label + " (codim " +
                                   std::to_string(r.codimension) + ")",
                               std::to_string(r.top_degree) + ".." +
                                   std::to_string(r.bottom_degree)});
        }
        std::cout << tables::render(rt, tables::format_by_name(format));
        return kExitOk;
    }
    if (action == "show") {
        const auto& e = db.entry(name);
        tables::Table t;
        t.headers = {"degree", "group", "provenance"};
        for (const auto& [d, g] : e.groups.groups())
            t.rows.push_back({std::to_string(d), g.to_string(), e.provenance.at(d)});
        std::cout << tables::render(t, tables::format_by_name(format));
        return kExitOk;
    }
    std::cerr << "error: unknown db action '" << action << "' (validate, list, show)\n";
    return kExitUsage;
}

int cmd_solve_recipe(const std::string& db_path, const std::string& recipe,
                     const std::string& constraints_path, const std::string& format) {
    bordismdb::Database db = bordismdb::Database::load(resolve_db_path(db_path));
    les::ExactSequence seq = db.build_les(recipe);
    std::vector<les::SideConstraint> constraints;
    if (!constraints_path.empty()) {
        les::SequenceDocument extra = les::load_sequence_file(constraints_path);
        constraints = extra.constraints;
    }
    les::SolveResult r = les::solve(seq, constraints);
    if (format == "json") {
        les::SequenceDocument out{r.sequence, constraints};
        std::cout << les::print_sequence_document(out);
    } else {
        std::cout << tables::render(window_table(r.sequence), tables::format_by_name(format));
    }
    std::cerr << r.report();
    return r.ok() ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Smith long exact sequence calculator"};
    app.require_subcommand(1);

    std::string structure, base = "BZ2", bundle, format = "ascii";
    std::string db_path, input, constraints, entry, recipe, db_action = "list", db_name;
    std::string convention = "n+1";
    unsigned long bound = 64, upto = 16;
    unsigned truncate = 8;
    int degree = 0;
    std::optional<int> top, bottom;

    auto* period = app.add_subcommand("period", "Smith family period of a twisted structure");
    period->add_option("--structure", structure, "o, so, spinc, spin, string")->required();
    period->add_option("--base", base, "BZ2, BU1, BSO3, BSU2");
    period->add_option("--bundle", bundle, "bundle expression, e.g. sigma or 2*L")->required();
    period->add_option("--bound", bound, "search bound (default 64)");
    period->add_option("--format", format, "ascii, csv, json");

    auto* sw = app.add_subcommand("sw", "total Stiefel-Whitney class of a bundle expression");
    sw->add_option("--base", base, "BZ2, BU1, BSO3, BSU2");
    sw->add_option("--bundle", bundle, "bundle expression")->required();
    sw->add_option("--truncate", truncate, "truncation degree (default 8)");

    auto* james = app.add_subcommand("james", "James periodicity 2^phi(k) table");
    james->add_option("--upto", upto, "table rows k = 1..upto (default 16)");
    james->add_option("--format", format, "ascii, csv, json");

    auto* lessolve = app.add_subcommand("les-solve", "solve a sequence window by exactness");
    lessolve->add_option("input", input, "sequence document (JSON)")->required();
    lessolve->add_option("--constraints", constraints, "extra constraints document");
    lessolve->add_option("--format", format, "ascii, csv, json");

    auto* solverecipe =
        app.add_subcommand("solve-recipe", "build a database recipe window and solve it");
    solverecipe->add_option("--db", db_path, "database path (or env SMITHLES_DB)");
    solverecipe->add_option("--recipe", recipe, "recipe name")->required();
    solverecipe->add_option("--constraints", constraints, "constraints document");
    solverecipe->add_option("--format", format, "ascii, csv, json");

    auto* sbles = app.add_subcommand("sbles", "Anderson-dualized table of a recipe window");
    sbles->add_option("--db", db_path, "database path (or env SMITHLES_DB)");
    sbles->add_option("--recipe", recipe, "recipe name")->required();
    sbles->add_option("--top", top, "top row degree");
    sbles->add_option("--bottom", bottom, "bottom row degree");
    sbles->add_option("--format", format, "ascii, csv, json");
    sbles->add_option("--convention", convention, "n+1 (default) or n+2");

    auto* anderson_cmd = app.add_subcommand("anderson", "Anderson dual of one stored degree");
    anderson_cmd->add_option("--db", db_path, "database path (or env SMITHLES_DB)");
    anderson_cmd->add_option("--entry", entry, "database entry name")->required();
    anderson_cmd->add_option("--degree", degree, "degree n of IZ^n")->required();
    anderson_cmd->add_option("--convention", convention, "n+1 (default) or n+2");

    auto* dbcmd = app.add_subcommand("db", "inspect the bordism database");
    dbcmd->add_option("action", db_action, "validate, list, show");
    dbcmd->add_option("name", db_name, "entry name for show");
    dbcmd->add_option("--db", db_path, "database path (or env SMITHLES_DB)");
    dbcmd->add_option("--format", format, "ascii, csv, json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (period->parsed()) return cmd_period(structure, base, bundle, bound, format);
        if (sw->parsed()) return cmd_sw(base, bundle, truncate);
        if (james->parsed()) return cmd_james(upto, format);
        if (lessolve->parsed()) return cmd_les_solve(input, constraints, format);
        if (solverecipe->parsed()) return cmd_solve_recipe(db_path, recipe, constraints, format);
        if (sbles->parsed()) return cmd_sbles(db_path, recipe, top, bottom, format, convention);
        if (anderson_cmd->parsed()) return cmd_anderson(db_path, entry, degree, convention);
        if (dbcmd->parsed()) return cmd_db(db_path, db_action, db_name, format);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const UnsupportedCaseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const PresentationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
