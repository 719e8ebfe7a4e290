#pragma once

// Machine-readable result tables. CSV carries metadata as '#' comment lines
// before the header; JSON nests it under "metadata". Numbers are emitted in
// shortest round-trip form, so identical tables serialize byte-identically.

#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ubicap/errors.hpp"
#include "ubicap/format.hpp"

namespace ubicap {

enum class TableFormat { csv, json };

struct ResultTable {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

namespace detail {

inline std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string quoted = "\"";
    for (const char ch : field) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

inline void require_rectangular(const ResultTable& table) {
    for (const auto& row : table.rows)
        if (row.size() != table.columns.size())
            throw domain_error("table row width " + format_double(row.size()) +
                               " does not match column count " +
                               format_double(table.columns.size()));
}

} // namespace detail

inline void write_csv(const ResultTable& table, std::ostream& os) {
    detail::require_rectangular(table);
    for (const auto& [key, value] : table.metadata) os << "# " << key << " = " << value << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ',';
        os << detail::csv_quote(table.columns[i]);
    }
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << format_double(row[i]);
        }
        os << "\n";
    }
}

inline void write_json(const ResultTable& table, std::ostream& os) {
    detail::require_rectangular(table);
    nlohmann::ordered_json doc;
    auto& meta = doc["metadata"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.metadata) meta[key] = value;
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    os << doc.dump(2) << "\n";
}

inline void write_table(const ResultTable& table, TableFormat format, std::ostream& os) {
    if (format == TableFormat::csv)
        write_csv(table, os);
    else
        write_json(table, os);
}

inline void write_table_file(const ResultTable& table, TableFormat format,
                             const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open output file: " + path.string());
    write_table(table, format, out);
    out.flush();
    if (!out) throw io_error("failed writing output file: " + path.string());
}

} // namespace ubicap
