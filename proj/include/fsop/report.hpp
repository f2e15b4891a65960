#pragma once

#include "fsop/types.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace fsop {

enum class Format { csv, tsv, json };

Format format_from_string(const std::string& s);

/// A named table of preformatted cells. Numeric columns are written bare in
/// JSON, everything else as strings.
struct Report {
    std::string name;
    std::vector<std::string> columns;
    std::vector<bool> numeric;
    std::vector<std::vector<std::string>> rows;

    void add_column(std::string column, bool is_numeric = true);
    void add_row(std::vector<std::string> cells);
};

// Fixed 6 decimals, or enough digits to round-trip a long double.
std::string format_real(Real v, bool full_precision = false);

// Six significant digits (residuals, tolerances, errors).
std::string format_general(Real v, bool full_precision = false);

void write_report(std::ostream& os, const Report& r, Format f);

}  // namespace fsop
