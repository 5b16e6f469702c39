#pragma once

#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qca {

/// Shortest decimal representation that round-trips the double exactly.
/// Negative zero is normalized so identical data always produces identical
/// bytes.
inline std::string format_double(double v) {
    if (v == 0.0) v = 0.0;
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string format_int(long long v) { return std::to_string(v); }

enum class ColumnKind { Int, Real };

/// Plain numeric table with ordered metadata, written as CSV with '#'
/// metadata lines or rendered to JSON by the CLI. All numeric formatting is
/// deterministic.
struct Table {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> column_names;
    std::vector<ColumnKind> column_kinds;
    std::vector<std::vector<double>> rows;

    void add_metadata(std::string key, std::string value) {
        metadata.emplace_back(std::move(key), std::move(value));
    }
    void add_column(std::string name, ColumnKind kind) {
        column_names.push_back(std::move(name));
        column_kinds.push_back(kind);
    }
    void add_row(std::vector<double> row) { rows.push_back(std::move(row)); }

    std::string cell_text(std::size_t row, std::size_t col) const {
        const double v = rows[row][col];
        return column_kinds[col] == ColumnKind::Int
                   ? format_int(static_cast<long long>(v))
                   : format_double(v);
    }
};

/// UTF-8, comma separated, '#'-prefixed metadata lines, header row, LF endings.
inline void write_csv(const Table& table, std::ostream& os) {
    for (const auto& [key, value] : table.metadata) os << "# " << key << ": " << value << "\n";
    for (std::size_t c = 0; c < table.column_names.size(); ++c) {
        if (c) os << ",";
        os << table.column_names[c];
    }
    os << "\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
            if (c) os << ",";
            os << table.cell_text(r, c);
        }
        os << "\n";
    }
}

} // namespace qca
