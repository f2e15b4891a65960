#include "fsop/table_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace fsop {

namespace {

constexpr const char* kMagic = "# fsop freud-table v1";

std::string format_value(const HpReal& v, int digits) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(digits - 1) << v;
    return os.str();
}

std::string expect_header(std::istream& is, const std::string& key) {
    std::string line;
    if (!std::getline(is, line)) throw ConfigError("table file truncated before '" + key + "'");
    const std::string prefix = "# " + key + " ";
    if (line.rfind(prefix, 0) != 0) throw ConfigError("table file: expected '" + prefix + "'");
    return line.substr(prefix.size());
}

}  // namespace

void write_table(std::ostream& os, const FreudTable& t) {
    os << kMagic << '\n';
    os << "# precision_digits " << t.precision_digits << '\n';
    os << "# method " << to_string(t.method) << '\n';
    os << "n,a_sq,norm_sq,gamma\n";
    for (int n = 0; n <= t.n_max; ++n) {
        os << n << ',' << format_value(t.a_sq[n], t.precision_digits) << ','
           << format_value(t.norm_sq[n], t.precision_digits) << ','
           << format_value(t.gamma[n], t.precision_digits) << '\n';
    }
}

FreudTable read_table(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kMagic) throw ConfigError("not an fsop table file");

    FreudTable t;
    try {
        t.precision_digits = std::stoi(expect_header(is, "precision_digits"));
    } catch (const std::invalid_argument&) {
        throw ConfigError("table file: bad precision_digits");
    }
    t.method = method_from_string(expect_header(is, "method"));
    if (!std::getline(is, line) || line != "n,a_sq,norm_sq,gamma")
        throw ConfigError("table file: missing column header");

    PrecisionGuard guard(static_cast<unsigned>(t.precision_digits));
    int expected = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string n_str, a, nrm, g;
        if (!std::getline(row, n_str, ',') || !std::getline(row, a, ',') ||
            !std::getline(row, nrm, ',') || !std::getline(row, g))
            throw ConfigError("table file: malformed row '" + line + "'");
        if (std::stoi(n_str) != expected) throw ConfigError("table file: rows out of order");
        t.a_sq.emplace_back(a);
        t.norm_sq.emplace_back(nrm);
        t.gamma.emplace_back(g);
        ++expected;
    }
    if (expected < 3) throw ConfigError("table file: fewer than three rows");
    t.n_max = expected - 1;
    t.refresh_rounded();
    return t;
}

void save_table(const std::string& path, const FreudTable& t) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot write " + path);
    write_table(os, t);
}

FreudTable load_table(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot read " + path);
    return read_table(is);
}

}  // namespace fsop
