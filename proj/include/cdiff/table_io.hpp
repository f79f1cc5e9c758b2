#pragma once

// Exact table serialization. Values are always written as decimal strings
// ("p" or "p/q"); CSV uses LF line endings and a mandatory header row.

#include "cdiff/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdiff {

struct TableRow {
    std::size_t n = 0;
    std::optional<std::size_t> k;  // absent for sequences
    Rational value;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// A sequence (n, value) or a triangle (n, k, value) of exact values.
struct ExactTable {
    std::string family;
    std::map<std::string, std::string> params;
    bool triangular = false;
    std::vector<TableRow> rows;
};

inline std::string to_csv(const ExactTable& table) {
    std::string out = table.triangular ? "n,k,value\n" : "n,value\n";
    for (const auto& row : table.rows) {
        out += std::to_string(row.n);
        if (table.triangular) out += "," + std::to_string(row.k.value_or(0));
        out += "," + row.value.str() + "\n";
    }
    return out;
}

namespace detail {

inline std::size_t parse_index(std::string_view field, std::size_t line) {
    if (field.empty()) throw std::invalid_argument("csv line " + std::to_string(line) + ": empty index");
    std::size_t v = 0;
    for (char c : field) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("csv line " + std::to_string(line) + ": bad index '" + std::string(field) + "'");
        }
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            out.push_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace detail

/// Parses the CSV produced by to_csv. Family and params are not part of the
/// CSV payload and come back empty.
inline ExactTable from_csv(std::string_view text) {
    ExactTable table;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (!header_seen) {
            if (line == "n,k,value") table.triangular = true;
            else if (line != "n,value") throw std::invalid_argument("csv: unexpected header '" + std::string(line) + "'");
            header_seen = true;
            continue;
        }
        auto fields = detail::split_commas(line);
        const std::size_t want = table.triangular ? 3 : 2;
        if (fields.size() != want) {
            throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected " + std::to_string(want) +
                                        " fields");
        }
        TableRow row;
        row.n = detail::parse_index(fields[0], line_no);
        if (table.triangular) row.k = detail::parse_index(fields[1], line_no);
        row.value = Rational::parse(fields.back());
        table.rows.push_back(std::move(row));
    }
    if (!header_seen) throw std::invalid_argument("csv: missing header");
    return table;
}

inline nlohmann::json to_json(const ExactTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json r{{"n", row.n}, {"value", row.value.str()}};
        if (table.triangular) r["k"] = row.k.value_or(0);
        rows.push_back(std::move(r));
    }
    return {{"family", table.family}, {"params", table.params}, {"rows", std::move(rows)}};
}

inline ExactTable from_json(const nlohmann::json& j) {
    ExactTable table;
    table.family = j.at("family").get<std::string>();
    table.params = j.at("params").get<std::map<std::string, std::string>>();
    for (const auto& r : j.at("rows")) {
        TableRow row;
        row.n = r.at("n").get<std::size_t>();
        if (r.contains("k")) {
            row.k = r.at("k").get<std::size_t>();
            table.triangular = true;
        }
        row.value = Rational::parse(r.at("value").get<std::string>());
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace cdiff
