#include "qpdeg/output_table.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace qpdeg {

OutputTable::OutputTable(std::vector<std::string> header) : header_(std::move(header)) {
    if (header_.empty()) {
        throw std::invalid_argument("output table needs at least one column");
    }
}

void OutputTable::add_row(std::vector<Cell> row) {
    if (row.size() != header_.size()) {
        throw std::invalid_argument(fmt::format("row has {} cells, table has {} columns", row.size(), header_.size()));
    }
    rows_.push_back(std::move(row));
}

std::string format_number(double value) {
    if (value == 0.0) {
        value = 0.0;
    }
    return fmt::format("{:.{}g}", value, kSignificantDigits);
}

void write_csv(std::ostream& out, const OutputTable& table) {
    for (const auto& line : table.comments()) {
        out << "# " << line << '\n';
    }
    for (std::size_t i = 0; i < table.header().size(); ++i) {
        out << (i ? "," : "") << table.header()[i];
    }
    out << '\n';
    for (const auto& row : table.rows()) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << (row[i] ? format_number(*row[i]) : std::string("none"));
        }
        out << '\n';
    }
    for (const auto& line : table.footers()) {
        out << "# " << line << '\n';
    }
}

} // namespace qpdeg
