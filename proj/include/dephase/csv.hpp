// csv.hpp: RFC-4180 tables with a versioned comment header.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dephase {

inline constexpr std::string_view kSchemaLine = "# dephase-lab schema v1";

// 17 significant digits (round-trips every double); "nan", "inf", "-inf".
std::string format_double(double x);

// Quotes a field when it contains a comma, quote, CR or LF.
std::string csv_escape(std::string_view field);

using CsvCell = std::variant<double, std::int64_t, std::uint64_t, std::string>;

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> columns);

    void add_comment(std::string text);  // written as "# text" before the header
    void add_row(std::vector<CsvCell> row);

    [[nodiscard]] const std::vector<std::string>& columns() const noexcept { return columns_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }

    // Comments, then the header row, then data rows; "\n" line endings.
    void write(std::ostream& os) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::string> comments_;
    std::vector<std::vector<CsvCell>> rows_;
};

}  // namespace dephase
