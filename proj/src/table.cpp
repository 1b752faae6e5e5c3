#include "smithles/table.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "smithles/errors.hpp"

namespace smithles::tables {

Format format_by_name(const std::string& name) {
    if (name == "ascii") return Format::Ascii;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw ContractError("unknown format '" + name + "' (ascii, csv, json)");
}

std::string to_ascii(const Table& t) {
    std::vector<std::size_t> widths(t.headers.size());
    for (std::size_t j = 0; j < t.headers.size(); ++j) widths[j] = t.headers[j].size();
    for (const auto& row : t.rows)
        for (std::size_t j = 0; j < row.size() && j < widths.size(); ++j)
            widths[j] = std::max(widths[j], row[j].size());

    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            os << row[j];
            if (j + 1 < row.size()) os << std::string(widths[j] - row[j].size() + 2, ' ');
        }
        os << "\n";
    };
    emit(t.headers);
    std::size_t total = 0;
    for (std::size_t j = 0; j < widths.size(); ++j) total += widths[j] + (j + 1 < widths.size() ? 2 : 0);
    os << std::string(total, '-') << "\n";
    for (const auto& row : t.rows) emit(row);
    return os.str();
}

std::string to_csv(const Table& t) {
    std::ostringstream os;
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    };
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << quote(row[j]);
        os << "\n";
    };
    emit(t.headers);
    for (const auto& row : t.rows) emit(row);
    return os.str();
}

std::string to_json(const Table& t) {
    nlohmann::json out;
    out["headers"] = t.headers;
    out["rows"] = nlohmann::json::array();
    for (const auto& row : t.rows) out["rows"].push_back(row);
    return out.dump(2) + "\n";
}

std::string render(const Table& t, Format f) {
    switch (f) {
        case Format::Ascii: return to_ascii(t);
        case Format::Csv: return to_csv(t);
        case Format::Json: return to_json(t);
    }
    throw ContractError("unreachable format");
}

}  // namespace smithles::tables
