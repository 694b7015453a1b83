#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace shellrev {

/// Shortest round-trip decimal representation (std::to_chars).
std::string format_double(double v);

struct Column {
    std::string name;
    std::string unit;  // "1" for dimensionless, "len", "1/len", ...
};

using Cell = std::variant<double, std::int64_t, std::string>;

/// Deterministic result table: fixed schema, fixed row order, metadata block
/// carrying parameters and convention notes.
struct ResultTable {
    std::vector<Column> schema;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, std::string>> meta;

    void add_meta(std::string key, std::string value) { meta.emplace_back(std::move(key), std::move(value)); }
    void add_row(std::vector<Cell> cells);
};

/// Leading "# key = value" lines, then "name(unit)" header, then rows.
std::string to_csv(const ResultTable& t);
/// {"schema": [...], "rows": [...], "meta": {...}} with insertion order kept.
std::string to_json(const ResultTable& t);

}  // namespace shellrev
