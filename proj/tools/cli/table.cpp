#include "cli/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace jtspec::cli {

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size())
        throw std::logic_error("table row has " + std::to_string(row.size()) + " cells, expected " +
                               std::to_string(columns.size()));
    rows.push_back(std::move(row));
}

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

namespace {

std::string cell_text(const Cell& cell)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
                return format_number(v);
            else if constexpr (std::is_same_v<T, std::int64_t>)
                return std::to_string(v);
            else
                return v;
        },
        cell);
}

nlohmann::ordered_json cell_json(const Cell& cell)
{
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v))
                    return nullptr;
                // Same 9 significant digits as the CSV.
                return std::stod(format_number(v));
            } else {
                return v;
            }
        },
        cell);
}

}  // namespace

void write_csv(const Table& table, std::ostream& os)
{
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << (c ? "," : "") << table.columns[c];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "," : "") << cell_text(row[c]);
        os << '\n';
    }
}

void write_json(const Table& table, std::ostream& os)
{
    nlohmann::ordered_json doc;
    doc["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < row.size(); ++c)
            obj[table.columns[c]] = cell_json(row[c]);
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.summary)
        summary[key] = cell_json(value);
    doc["summary"] = std::move(summary);
    os << doc.dump(2) << '\n';
}

void write_pretty(const Table& table, std::ostream& os)
{
    std::vector<std::size_t> width(table.columns.size());
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        width[c] = table.columns[c].size();
    for (const auto& row : table.rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], cell_text(row[c]).size());

    auto line = [&](auto&& text_of) {
        for (std::size_t c = 0; c < width.size(); ++c)
            os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << text_of(c);
        os << '\n';
    };
    line([&](std::size_t c) { return table.columns[c]; });
    for (const auto& row : table.rows)
        line([&](std::size_t c) { return cell_text(row[c]); });
    if (!table.summary.empty()) {
        os << '\n';
        write_summary(table, os);
    }
}

void write_summary(const Table& table, std::ostream& os)
{
    for (const auto& [key, value] : table.summary)
        os << key << ": " << cell_text(value) << '\n';
}

void write_table(const Table& table, OutputFormat format, std::ostream& os)
{
    switch (format) {
    case OutputFormat::Csv: write_csv(table, os); break;
    case OutputFormat::Json: write_json(table, os); break;
    case OutputFormat::Pretty: write_pretty(table, os); break;
    }
}

}  // namespace jtspec::cli
