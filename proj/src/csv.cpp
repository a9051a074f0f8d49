// csv.cpp

#include "dephase/csv.hpp"

#include <cmath>
#include <cstdio>

#include "dephase/errors.hpp"

namespace dephase {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

CsvTable::CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw ContractViolation("CsvTable: no columns");
}

void CsvTable::add_comment(std::string text) { comments_.push_back(std::move(text)); }

void CsvTable::add_row(std::vector<CsvCell> row) {
    if (row.size() != columns_.size()) throw ContractViolation("CsvTable: row width mismatch");
    rows_.push_back(std::move(row));
}

void CsvTable::write(std::ostream& os) const {
    for (const auto& c : comments_) os << "# " << c << '\n';
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) os << ',';
        os << csv_escape(columns_[i]);
    }
    os << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        os << format_double(v);
                    } else if constexpr (std::is_same_v<T, std::string>) {
                        os << csv_escape(v);
                    } else {
                        os << v;
                    }
                },
                row[i]);
        }
        os << '\n';
    }
}

}  // namespace dephase
