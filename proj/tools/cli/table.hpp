#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace jtspec::cli {

using Cell = std::variant<double, std::int64_t, std::string>;

/// One result table. Column names double as JSON field names.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// Key/value lines that do not belong in the CSV body.
    std::vector<std::pair<std::string, Cell>> summary;

    void add_row(std::vector<Cell> row);
};

enum class OutputFormat { Csv, Json, Pretty };

/// %.9g; NaN prints as "nan".
std::string format_number(double value);

void write_csv(const Table& table, std::ostream& os);
void write_json(const Table& table, std::ostream& os);
void write_pretty(const Table& table, std::ostream& os);
void write_summary(const Table& table, std::ostream& os);

void write_table(const Table& table, OutputFormat format, std::ostream& os);

}  // namespace jtspec::cli
