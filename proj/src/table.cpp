#include "shellrev/table.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace shellrev {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void ResultTable::add_row(std::vector<Cell> cells) {
    if (cells.size() != schema.size())
        throw std::invalid_argument("ResultTable: row width does not match schema");
    rows.push_back(std::move(cells));
}

namespace {

std::string cell_to_string(const Cell& c) {
    if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
    if (std::holds_alternative<std::int64_t>(c)) return std::to_string(std::get<std::int64_t>(c));
    return std::get<std::string>(c);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_csv(const ResultTable& t) {
    std::ostringstream os;
    for (const auto& [k, v] : t.meta) os << "# " << k << " = " << v << "\n";
    for (size_t i = 0; i < t.schema.size(); ++i) {
        if (i) os << ",";
        os << t.schema[i].name << "(" << t.schema[i].unit << ")";
    }
    os << "\n";
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << csv_escape(cell_to_string(row[i]));
        }
        os << "\n";
    }
    return os.str();
}

std::string to_json(const ResultTable& t) {
    nlohmann::ordered_json j;
    j["schema"] = nlohmann::ordered_json::array();
    for (const auto& col : t.schema) j["schema"].push_back({{"name", col.name}, {"unit", col.unit}});
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json jr = nlohmann::ordered_json::array();
        for (const auto& c : row) {
            if (std::holds_alternative<double>(c)) {
                double v = std::get<double>(c);
                if (std::isfinite(v))
                    jr.push_back(v);
                else
                    jr.push_back(format_double(v));
            } else if (std::holds_alternative<std::int64_t>(c)) {
                jr.push_back(std::get<std::int64_t>(c));
            } else {
                jr.push_back(std::get<std::string>(c));
            }
        }
        j["rows"].push_back(std::move(jr));
    }
    nlohmann::ordered_json meta;
    for (const auto& [k, v] : t.meta) meta[k] = v;
    j["meta"] = std::move(meta);
    return j.dump(2) + "\n";
}

}  // namespace shellrev
