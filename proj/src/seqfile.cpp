#include "smithles/seqfile.hpp"

#include <fstream>

#include "json.hpp"
#include "smithles/errors.hpp"
#include "smithles/group_expr.hpp"

namespace smithles::les {

namespace {

using nlohmann::json;
using fgab::FgAbGroup;
using fgab::GroupHom;
using fgab::Int;
using fgab::IntMatrix;

long long to_ll(const Int& v) {
    if (!v.fits_slong_p())
        throw PresentationError("matrix entry too large for the document format");
    return v.get_si();
}

json matrix_to_json(const IntMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(to_ll(m(i, j)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw PresentationError("matrix object needs rows, cols, entries");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols)
        throw PresentationError("matrix entry count must be rows*cols");
    IntMatrix m(rows, cols);
    std::size_t k = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t jj = 0; jj < cols; ++jj) m(i, jj) = (long)entries[k++].get<long long>();
    return m;
}

json node_to_json(const SequenceNode& n) {
    json out{{"degree", n.degree}, {"label", n.label}};
    switch (n.state.kind()) {
        case NodeState::Kind::Known:
            out["group"] = n.state.group().to_string();
            break;
        case NodeState::Kind::Candidates: {
            json cands = json::array();
            for (const FgAbGroup& g : n.state.candidate_set()) cands.push_back(g.to_string());
            out["group"] = json{{"candidates", cands}};
            break;
        }
        case NodeState::Kind::OrderConstrained: {
            if (n.state.allowed_orders().empty()) {
                out["group"] = json{{"order", "finite"}};
            } else {
                json orders = json::array();
                for (const Int& o : n.state.allowed_orders()) orders.push_back(to_ll(o));
                out["group"] = json{{"order", orders}};
            }
            break;
        }
        case NodeState::Kind::Unknown:
            out["group"] = "?";
            break;
    }
    return out;
}

NodeState node_state_from_json(const json& g) {
    if (g.is_string()) {
        std::string s = g.get<std::string>();
        if (s == "?") return NodeState::unknown();
        return NodeState::known(fgab::parse_group(s));
    }
    if (g.is_object() && g.contains("candidates")) {
        std::vector<FgAbGroup> cands;
        for (const auto& c : g.at("candidates")) cands.push_back(fgab::parse_group(c.get<std::string>()));
        return NodeState::candidates(std::move(cands));
    }
    if (g.is_object() && g.contains("order")) {
        const json& o = g.at("order");
        if (o.is_string() && o.get<std::string>() == "finite") return NodeState::finite_order();
        std::vector<Int> orders;
        if (o.is_number_integer()) {
            orders.emplace_back((long)o.get<long long>());
        } else if (o.is_array()) {
            for (const auto& v : o) orders.emplace_back((long)v.get<long long>());
        } else {
            throw PresentationError("order must be an integer, list, or \"finite\"");
        }
        return NodeState::order_constrained(std::move(orders));
    }
    throw PresentationError("unrecognized node group field");
}

json flags_to_json(const EdgeFlags& f) {
    json out = json::object();
    if (f.injective) out["injective"] = *f.injective;
    if (f.surjective) out["surjective"] = *f.surjective;
    if (f.zero) out["zero"] = *f.zero;
    if (f.kernel) out["kernel"] = f.kernel->to_string();
    if (f.image) out["image"] = f.image->to_string();
    return out;
}

EdgeFlags flags_from_json(const json& j) {
    EdgeFlags f;
    if (j.contains("injective")) f.injective = j.at("injective").get<bool>();
    if (j.contains("surjective")) f.surjective = j.at("surjective").get<bool>();
    if (j.contains("zero")) f.zero = j.at("zero").get<bool>();
    if (j.contains("kernel")) f.kernel = fgab::parse_group(j.at("kernel").get<std::string>());
    if (j.contains("image")) f.image = fgab::parse_group(j.at("image").get<std::string>());
    return f;
}

json edge_to_json(const SequenceEdge& e) {
    json out{{"name", e.name}};
    switch (e.state.kind()) {
        case EdgeState::Kind::KnownMap:
            out["map"] = json{{"matrix", matrix_to_json(e.state.map().matrix())}};
            break;
        case EdgeState::Kind::PropertyConstrained:
            if (e.state.flags().zero && *e.state.flags().zero && !e.state.flags().kernel &&
                !e.state.flags().image && !e.state.flags().injective && !e.state.flags().surjective)
                out["map"] = "zero";
            else
                out["map"] = json{{"flags", flags_to_json(e.state.flags())}};
            break;
        case EdgeState::Kind::Unknown:
            out["map"] = "?";
            break;
    }
    return out;
}

}  // namespace

SequenceDocument parse_sequence_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw PresentationError(std::string("sequence document is not valid JSON: ") +
                                err.what());
    }
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges"))
        throw PresentationError("sequence document needs nodes and edges");

    SequenceDocument out;
    for (const json& jn : doc.at("nodes")) {
        SequenceNode node;
        node.degree = jn.value("degree", 0);
        node.label = jn.value("label", std::string{});
        node.state = node_state_from_json(jn.at("group"));
        out.sequence.nodes.push_back(std::move(node));
    }
    std::size_t edge_index = 0;
    for (const json& je : doc.at("edges")) {
        SequenceEdge edge;
        edge.name = je.value("name", std::string{});
        const json& m = je.at("map");
        if (m.is_string()) {
            std::string s = m.get<std::string>();
            if (s == "?") {
                edge.state = EdgeState::unknown();
            } else if (s == "zero") {
                edge.state = EdgeState::zero_map();
            } else {
                throw PresentationError("edge map must be \"?\", \"zero\", a matrix, or flags");
            }
        } else if (m.is_object() && m.contains("matrix")) {
            // Domain and codomain come from the adjacent nodes.
            std::size_t i = edge_index;
            if (i + 1 >= out.sequence.nodes.size())
                throw PresentationError("edge beyond the node list");
            const NodeState& a = out.sequence.nodes[i].state;
            const NodeState& b = out.sequence.nodes[i + 1].state;
            if (a.kind() != NodeState::Kind::Known || b.kind() != NodeState::Kind::Known)
                throw PresentationError("matrix edges need known endpoint groups");
            edge.state = EdgeState::known_map(
                GroupHom(a.group(), b.group(), matrix_from_json(m.at("matrix"))));
        } else if (m.is_object() && m.contains("flags")) {
            edge.state = EdgeState::property_constrained(flags_from_json(m.at("flags")));
        } else {
            throw PresentationError("unrecognized edge map field");
        }
        out.sequence.edges.push_back(std::move(edge));
        ++edge_index;
    }
    if (doc.contains("constraints")) {
        for (const json& jc : doc.at("constraints")) {
            std::string kind = jc.at("kind").get<std::string>();
            if (kind == "embeds_into") {
                out.constraints.push_back(SideConstraint::embeds_into(
                    jc.at("node").get<std::size_t>(),
                    fgab::parse_group(jc.at("group").get<std::string>())));
            } else if (kind == "is_quotient_of") {
                out.constraints.push_back(SideConstraint::is_quotient_of(
                    jc.at("node").get<std::size_t>(),
                    fgab::parse_group(jc.at("group").get<std::string>())));
            } else if (kind == "map_equals") {
                std::size_t i = jc.at("edge").get<std::size_t>();
                if (i + 1 >= out.sequence.nodes.size())
                    throw PresentationError("map_equals references a missing edge");
                const NodeState& a = out.sequence.nodes[i].state;
                const NodeState& b = out.sequence.nodes[i + 1].state;
                if (a.kind() != NodeState::Kind::Known || b.kind() != NodeState::Kind::Known)
                    throw PresentationError("map_equals needs known endpoint groups");
                out.constraints.push_back(SideConstraint::map_equals(
                    i, GroupHom(a.group(), b.group(), matrix_from_json(jc.at("matrix")))));
            } else {
                throw PresentationError("unknown constraint kind '" + kind + "'");
            }
        }
    }
    out.sequence.validate();
    return out;
}

std::string print_sequence_document(const SequenceDocument& doc) {
    json out;
    out["nodes"] = json::array();
    for (const SequenceNode& n : doc.sequence.nodes) out["nodes"].push_back(node_to_json(n));
    out["edges"] = json::array();
    for (const SequenceEdge& e : doc.sequence.edges) out["edges"].push_back(edge_to_json(e));
    json cons = json::array();
    for (const SideConstraint& c : doc.constraints) {
        switch (c.kind) {
            case SideConstraint::Kind::EmbedsInto:
                cons.push_back(json{{"kind", "embeds_into"},
                                    {"node", c.index},
                                    {"group", c.group->to_string()}});
                break;
            case SideConstraint::Kind::IsQuotientOf:
                cons.push_back(json{{"kind", "is_quotient_of"},
                                    {"node", c.index},
                                    {"group", c.group->to_string()}});
                break;
            case SideConstraint::Kind::MapEquals:
                cons.push_back(json{{"kind", "map_equals"},
                                    {"edge", c.index},
                                    {"matrix", matrix_to_json(c.map->matrix())}});
                break;
        }
    }
    if (!cons.empty()) out["constraints"] = cons;
    return out.dump(2) + "\n";
}

SequenceDocument load_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PresentationError("cannot open sequence file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_sequence_document(text);
}

void save_sequence_file(const SequenceDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw PresentationError("cannot write sequence file '" + path + "'");
    out << print_sequence_document(doc);
}

}  // namespace smithles::les
