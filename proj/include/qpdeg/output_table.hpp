#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qpdeg {

/// A CSV cell; nullopt is written as `none`.
using Cell = std::optional<double>;

/// Column-checked table with `#` comment lines before and after the data.
class OutputTable {
public:
    explicit OutputTable(std::vector<std::string> header);

    /// Throws std::invalid_argument when the width does not match the header.
    void add_row(std::vector<Cell> row);
    void add_comment(std::string line) { comments_.push_back(std::move(line)); }
    void add_footer(std::string line) { footers_.push_back(std::move(line)); }

    const std::vector<std::string>& header() const noexcept { return header_; }
    const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }
    const std::vector<std::string>& comments() const noexcept { return comments_; }
    const std::vector<std::string>& footers() const noexcept { return footers_; }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<Cell>> rows_;
    std::vector<std::string> comments_;
    std::vector<std::string> footers_;
};

inline constexpr int kSignificantDigits = 12;

/// Shortest decimal of `value` rounded to 12 significant digits; -0 prints as 0.
std::string format_number(double value);

/// LF line endings, `,` separators, `.` decimal point regardless of locale.
void write_csv(std::ostream& out, const OutputTable& table);

} // namespace qpdeg
