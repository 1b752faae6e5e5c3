#include "smithles/bordismdb.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "smithles/errors.hpp"
#include "smithles/group_expr.hpp"

namespace smithles::bordismdb {

using nlohmann::json;
using fgab::FgAbGroup;

namespace {

std::string degree_key(int d) { return std::to_string(d); }

int parse_degree_key(const std::string& key, const std::string& context) {
    try {
        std::size_t used = 0;
        int d = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
        return d;
    } catch (const std::exception&) {
        throw PresentationError("bad degree key '" + key + "' in " + context);
    }
}

}  // namespace

Database Database::from_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw PresentationError(std::string("database is not valid JSON: ") + err.what());
    }
    Database db;
    if (!doc.is_object() || !doc.contains("entries"))
        throw PresentationError("database document needs an entries array");
    for (const json& je : doc.at("entries")) {
        DbEntry e;
        e.name = je.at("name").get<std::string>();
        if (db.entries_.count(e.name))
            throw PresentationError("duplicate entry name '" + e.name + "'");
        std::map<int, FgAbGroup> groups;
        for (const auto& [key, value] : je.at("groups").items()) {
            int d = parse_degree_key(key, "entry '" + e.name + "'");
            try {
                groups[d] = fgab::parse_group(value.get<std::string>());
            } catch (const ParseError& err) {
                throw PresentationError("entry '" + e.name + "' degree " + key + ": " +
                                        err.what());
            }
        }
        for (const auto& [key, value] : je.at("provenance").items())
            e.provenance[parse_degree_key(key, "entry '" + e.name + "'")] =
                value.get<std::string>();
        for (const auto& [d, g] : groups)
            if (!e.provenance.count(d))
                throw PresentationError("entry '" + e.name + "' degree " + degree_key(d) +
                                        " lacks a provenance string");
        e.groups = anderson::GradedGroup(e.name, std::move(groups));
        db.entries_.emplace(e.name, std::move(e));
    }
    if (doc.contains("recipes")) {
        for (const json& jr : doc.at("recipes")) {
            Recipe r;
            r.name = jr.at("name").get<std::string>();
            if (db.recipes_.count(r.name))
                throw PresentationError("duplicate recipe name '" + r.name + "'");
            r.codimension = jr.at("codimension").get<unsigned>();
            const json& cols = jr.at("columns");
            if (!cols.is_array() || cols.size() != 3)
                throw PresentationError("recipe '" + r.name + "' needs exactly 3 columns");
            for (std::size_t i = 0; i < 3; ++i) {
                r.columns[i].label = cols[i].at("label").get<std::string>();
                r.columns[i].entry = cols[i].at("entry").get<std::string>();
                if (!db.entries_.count(r.columns[i].entry))
                    throw PresentationError("recipe '" + r.name + "' references missing entry '" +
                                            r.columns[i].entry + "'");
            }
            r.top_degree = jr.at("top").get<int>();
            r.bottom_degree = jr.at("bottom").get<int>();
            if (r.top_degree < r.bottom_degree)
                throw PresentationError("recipe '" + r.name + "' has top below bottom");
            if (jr.contains("unknowns"))
                for (const json& ju : jr.at("unknowns"))
                    r.unknowns.emplace(ju.at("column").get<std::size_t>(),
                                       ju.at("degree").get<int>());
            if (jr.contains("edge_names")) {
                const json& en = jr.at("edge_names");
                for (std::size_t i = 0; i < 3 && i < en.size(); ++i)
                    r.edge_names[i] = en[i].get<std::string>();
            }
            if (jr.contains("scalar_edges"))
                for (const json& js : jr.at("scalar_edges"))
                    r.scalar_edges[js.at("edge").get<std::size_t>()] =
                        js.at("scalar").get<long>();
            db.recipes_.emplace(r.name, std::move(r));
        }
    }
    return db;
}

Database Database::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PresentationError("cannot open database '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_text(text);
}

std::string Database::to_text() const {
    json doc;
    doc["entries"] = json::array();
    for (const auto& [name, e] : entries_) {
        json je;
        je["name"] = name;
        json groups = json::object(), prov = json::object();
        for (const auto& [d, g] : e.groups.groups()) groups[degree_key(d)] = g.to_string();
        for (const auto& [d, p] : e.provenance) prov[degree_key(d)] = p;
        je["groups"] = groups;
        je["provenance"] = prov;
        doc["entries"].push_back(je);
    }
    doc["recipes"] = json::array();
    for (const auto& [name, r] : recipes_) {
        json jr;
        jr["name"] = name;
        jr["codimension"] = r.codimension;
        jr["columns"] = json::array();
        for (const auto& c : r.columns)
            jr["columns"].push_back(json{{"label", c.label}, {"entry", c.entry}});
        jr["top"] = r.top_degree;
        jr["bottom"] = r.bottom_degree;
        if (!r.unknowns.empty()) {
            json u = json::array();
            for (const auto& [col, d] : r.unknowns)
                u.push_back(json{{"column", col}, {"degree", d}});
            jr["unknowns"] = u;
        }
        jr["edge_names"] = r.edge_names;
        if (!r.scalar_edges.empty()) {
            json s = json::array();
            for (const auto& [pos, scalar] : r.scalar_edges)
                s.push_back(json{{"edge", pos}, {"scalar", scalar}});
            jr["scalar_edges"] = s;
        }
        doc["recipes"].push_back(jr);
    }
    return doc.dump(2) + "\n";
}

void Database::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw PresentationError("cannot write database '" + path + "'");
    out << to_text();
}

const DbEntry& Database::entry(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw ContractError("no database entry named '" + name + "'");
    return it->second;
}

const Recipe& Database::recipe(const std::string& name) const {
    auto it = recipes_.find(name);
    if (it == recipes_.end()) throw ContractError("no recipe named '" + name + "'");
    return it->second;
}

std::vector<std::string> Database::entry_names() const {
    std::vector<std::string> names;
    for (const auto& [n, _] : entries_) names.push_back(n);
    return names;
}

std::vector<std::string> Database::recipe_names() const {
    std::vector<std::string> names;
    for (const auto& [n, _] : recipes_) names.push_back(n);
    return names;
}

les::ExactSequence Database::build_les(const std::string& recipe_name) const {
    const Recipe& r = recipe(recipe_name);
    return build_les(recipe_name, r.top_degree, r.bottom_degree);
}

les::ExactSequence Database::build_les(const std::string& recipe_name, int top,
                                       int bottom) const {
    const Recipe& r = recipe(recipe_name);
    if (top < bottom) throw ContractError("degree range is empty");
    les::ExactSequence seq;
    std::vector<std::string> gaps;
    for (int k = top; k >= bottom; --k) {
        for (std::size_t c = 0; c < 3; ++c) {
            int d = c == 2 ? k - (int)r.codimension : k;
            les::SequenceNode node;
            node.degree = d;
            node.label = r.columns[c].label;
            const DbEntry& e = entry(r.columns[c].entry);
            if (e.groups.in_range(d)) {
                node.state = les::NodeState::known(e.groups.at(d));
            } else if (r.unknowns.count({c, d})) {
                node.state = les::NodeState::unknown();
            } else {
                gaps.push_back(r.columns[c].entry + " at degree " + std::to_string(d));
                node.state = les::NodeState::unknown();
            }
            seq.nodes.push_back(std::move(node));
        }
    }
    if (!gaps.empty()) {
        std::ostringstream os;
        os << "recipe '" << recipe_name << "' is missing ";
        for (std::size_t i = 0; i < gaps.size(); ++i) os << (i ? ", " : "") << gaps[i];
        os << " (mark cells \"?\" to allow)";
        throw PresentationError(os.str());
    }
    seq.edges.resize(seq.nodes.empty() ? 0 : seq.nodes.size() - 1);
    for (std::size_t i = 0; i < seq.edges.size(); ++i) {
        seq.edges[i].name = r.edge_names[i % 3];
        auto scalar = r.scalar_edges.find(i % 3);
        if (scalar == r.scalar_edges.end()) continue;
        const auto& a = seq.nodes[i].state;
        const auto& b = seq.nodes[i + 1].state;
        if (a.kind() != les::NodeState::Kind::Known || b.kind() != les::NodeState::Kind::Known)
            continue;
        if (!(a.group() == b.group()))
            throw PresentationError("scalar edge in recipe '" + recipe_name +
                                    "' needs equal endpoint groups");
        std::size_t n = a.group().generator_count();
        fgab::IntMatrix m(n, n);
        for (std::size_t g = 0; g < n; ++g) m(g, g) = scalar->second;
        seq.edges[i].state = les::EdgeState::known_map(fgab::GroupHom(a.group(), b.group(), m));
    }
    return seq;
}

std::map<std::string, anderson::GradedGroup> Database::recipe_columns(
    const std::string& recipe_name) const {
    const Recipe& r = recipe(recipe_name);
    std::map<std::string, anderson::GradedGroup> out;
    for (const auto& c : r.columns) out.emplace(c.label, entry(c.entry).groups);
    return out;
}

void Database::add_entry(DbEntry e) {
    if (entries_.count(e.name)) throw PresentationError("duplicate entry '" + e.name + "'");
    entries_.emplace(e.name, std::move(e));
}

void Database::add_recipe(Recipe r) {
    if (recipes_.count(r.name)) throw PresentationError("duplicate recipe '" + r.name + "'");
    recipes_.emplace(r.name, std::move(r));
}

}  // namespace smithles::bordismdb
