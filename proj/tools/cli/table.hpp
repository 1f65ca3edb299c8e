#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace gravheun::cli {

using Tags = std::vector<std::string>;
using Cell = std::variant<double, std::int64_t, std::string, bool, Tags>;

struct Column {
    std::string name;
    bool json_only = false;  // left out of CSV and text output
};

// Homogeneous records: every row has one cell per column.
struct Table {
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;

    Table() = default;
    explicit Table(std::vector<Column> cols) : columns(std::move(cols)) {}

    void add_row(std::vector<Cell> row);
    std::size_t column_index(const std::string& name) const;
};

enum class Format { csv, json, text };

// Full precision: %.17g for doubles, "nan"/"inf"/"-inf" in CSV, null in JSON.
std::string format_double(double x);

void write_csv(const Table& t, std::ostream& os);
void write_json(const Table& t, std::ostream& os);
void write_text(const Table& t, std::ostream& os);
void write_table(const Table& t, Format f, std::ostream& os);

// Parses the output of write_json back into a table with the given column
// layout; JSON null becomes NaN for double columns.
Table read_json(const std::string& text, const std::vector<Column>& columns);

}  // namespace gravheun::cli
