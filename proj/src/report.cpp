#include "fsop/report.hpp"

#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace fsop {

Format format_from_string(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "tsv") return Format::tsv;
    if (s == "json") return Format::json;
    throw ConfigError("unknown output format '" + s + "'");
}

void Report::add_column(std::string column, bool is_numeric) {
    columns.push_back(std::move(column));
    numeric.push_back(is_numeric);
}

void Report::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns.size())
        throw ConfigError("report '" + name + "': row has " + std::to_string(cells.size()) + " cells, expected " +
                          std::to_string(columns.size()));
    rows.push_back(std::move(cells));
}

std::string format_real(Real v, bool full_precision) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream os;
    if (full_precision)
        os << std::setprecision(std::numeric_limits<Real>::max_digits10) << v;
    else
        os << std::fixed << std::setprecision(6) << v;
    std::string s = os.str();
    if (s == "-0.000000") s = "0.000000";
    return s;
}

std::string format_general(Real v, bool full_precision) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os << std::setprecision(full_precision ? std::numeric_limits<Real>::max_digits10 : 6) << v;
    return os.str();
}

namespace {

void write_delimited(std::ostream& os, const Report& r, char sep) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << sep;
            const std::string& c = cells[i];
            if (sep == ',' && c.find_first_of(",\"\n") != std::string::npos) {
                os << '"';
                for (char ch : c) os << (ch == '"' ? "\"\"" : std::string(1, ch));
                os << '"';
            } else {
                os << c;
            }
        }
        os << '\n';
    };
    line(r.columns);
    for (const auto& row : r.rows) line(row);
}

bool json_number(const std::string& s) {
    return s != "nan" && s != "inf" && s != "-inf" && !s.empty();
}

}  // namespace

void write_report(std::ostream& os, const Report& r, Format f) {
    switch (f) {
        case Format::csv: write_delimited(os, r, ','); return;
        case Format::tsv: write_delimited(os, r, '\t'); return;
        case Format::json: break;
    }
    // Hand-assembled so numbers keep exactly the printed digits.
    os << "{\"name\": " << nlohmann::json(r.name).dump() << ", \"columns\": " << nlohmann::json(r.columns).dump()
       << ", \"rows\": [";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        os << (i ? ",\n  [" : "\n  [");
        for (std::size_t j = 0; j < r.rows[i].size(); ++j) {
            if (j) os << ", ";
            const std::string& c = r.rows[i][j];
            if (r.numeric[j] && json_number(c))
                os << c;
            else if (r.numeric[j])
                os << "null";
            else
                os << nlohmann::json(c).dump();
        }
        os << ']';
    }
    os << "\n]}\n";
}

}  // namespace fsop
