#pragma once

#include <string>
#include <vector>

namespace smithles::tables {

enum class Format { Ascii, Csv, Json };

Format format_by_name(const std::string& name);  // ascii, csv, json

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

// Aligned columns, two-space gutters; deterministic for identical input.
std::string to_ascii(const Table& t);
std::string to_csv(const Table& t);
std::string to_json(const Table& t);  // {"headers": [...], "rows": [[...]]}

std::string render(const Table& t, Format f);

}  // namespace smithles::tables
