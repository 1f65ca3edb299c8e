#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "table.hpp"

namespace gravheun::cli {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string cell_text(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else {
                std::string joined;
                for (const auto& s : v) joined += (joined.empty() ? "" : ";") + s;
                return joined;
            }
        },
        c);
}

nlohmann::json cell_json(const Cell& c) {
    return std::visit(
        [](const auto& v) -> nlohmann::json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) return nullptr;
                return v;
            } else {
                return v;
            }
        },
        c);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::invalid_argument("Table::add_row: row width does not match columns");
    rows.push_back(std::move(row));
}

std::size_t Table::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].name == name) return i;
    throw std::out_of_range("no column named " + name);
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(const Table& t, std::ostream& os) {
    bool first = true;
    for (const auto& col : t.columns) {
        if (col.json_only) continue;
        os << (first ? "" : ",") << csv_field(col.name);
        first = false;
    }
    os << '\n';
    for (const auto& row : t.rows) {
        first = true;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (t.columns[i].json_only) continue;
            os << (first ? "" : ",") << csv_field(cell_text(row[i]));
            first = false;
        }
        os << '\n';
    }
}

void write_json(const Table& t, std::ostream& os) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i].name] = cell_json(row[i]);
        arr.push_back(obj);
    }
    os << arr.dump(2) << '\n';
}

void write_text(const Table& t, std::ostream& os) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        if (!t.columns[i].json_only) keep.push_back(i);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width;
    for (std::size_t i : keep) width.push_back(t.columns[i].name.size());
    for (const auto& row : t.rows) {
        auto& line = cells.emplace_back();
        for (std::size_t k = 0; k < keep.size(); ++k) {
            line.push_back(cell_text(row[keep[k]]));
            width[k] = std::max(width[k], line.back().size());
        }
    }
    auto put = [&](std::size_t k, const std::string& s) {
        os << s;
        if (k + 1 < keep.size()) os << std::string(width[k] - s.size() + 2, ' ');
    };
    for (std::size_t k = 0; k < keep.size(); ++k) put(k, t.columns[keep[k]].name);
    os << '\n';
    for (const auto& line : cells) {
        for (std::size_t k = 0; k < line.size(); ++k) put(k, line[k]);
        os << '\n';
    }
}

void write_table(const Table& t, Format f, std::ostream& os) {
    switch (f) {
        case Format::csv: write_csv(t, os); break;
        case Format::json: write_json(t, os); break;
        case Format::text: write_text(t, os); break;
    }
}

Table read_json(const std::string& text, const std::vector<Column>& columns) {
    const auto arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("read_json: expected an array of records");
    Table t(columns);
    for (const auto& obj : arr) {
        std::vector<Cell> row;
        for (const auto& col : columns) {
            if (!obj.contains(col.name)) throw std::invalid_argument("read_json: record lacks key " + col.name);
            const auto& v = obj.at(col.name);
            if (v.is_null()) row.emplace_back(std::numeric_limits<double>::quiet_NaN());
            else if (v.is_number_float()) row.emplace_back(v.get<double>());
            else if (v.is_number_integer()) row.emplace_back(v.get<std::int64_t>());
            else if (v.is_boolean()) row.emplace_back(v.get<bool>());
            else if (v.is_string()) row.emplace_back(v.get<std::string>());
            else if (v.is_array()) row.emplace_back(v.get<Tags>());
            else throw std::invalid_argument("read_json: unsupported value for " + col.name);
        }
        t.add_row(std::move(row));
    }
    return t;
}

}  // namespace gravheun::cli
