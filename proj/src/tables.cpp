#include "fsop/tables.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>

namespace fsop {

const std::array<const char*, 5> kZeroTableColumns{"eta_5_2", "eta_4_2", "eta_5_3", "eta_4_3", "eta_5_4"};

Real zero_table_M0(int id) {
    if (id == 1) return 0;
    if (id == 2) return 1;
    throw ConfigError("zero tables are 1 and 2");
}

std::vector<Real> zero_table_M1(int id) {
    if (id == 1) return {0, 0.2L, 0.4L, 1.0L};
    if (id == 2) return {0, 0.4L, 0.9L, 2.0L};
    throw ConfigError("zero tables are 1 and 2");
}

std::vector<ZeroTableRow> compute_zero_table(const FreudTable& ft, Real M0, const std::vector<Real>& m1_values) {
    std::vector<ZeroTableRow> rows;
    for (Real M1 : m1_values) {
        const SobolevTable st = build_sobolev_table(ft, {M0, M1}, 6);
        const InterlacingReport rep = interlacing_report(st, ft, 4);
        const auto& lo = rep.lower.zeros;
        const auto& up = rep.upper.zeros;
        ZeroTableRow r;
        r.M0 = M0;
        r.M1 = M1;
        r.eta = {up[1], lo[1], up[2], lo[2], up[3]};
        r.rupture = std::any_of(rep.misplaced.begin(), rep.misplaced.end(), [](bool b) { return b; });
        for (int k = 1; k <= 3; ++k) r.flagged[2 * (k - 1)] = rep.misplaced[k];
        rows.push_back(r);
    }
    return rows;
}

namespace {

// Data lines of a CSV with '#' comments and one header row.
std::vector<std::vector<std::string>> csv_records(std::istream& is, std::size_t columns) {
    std::vector<std::vector<std::string>> out;
    std::string line;
    bool header = true;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        if (fields.size() != columns)
            throw ConfigError("reference line " + std::to_string(lineno) + ": expected " +
                              std::to_string(columns) + " fields, got " + std::to_string(fields.size()));
        out.push_back(std::move(fields));
    }
    return out;
}

Real parse_real(const std::string& s) {
    try {
        std::size_t used = 0;
        const Real v = std::stold(s, &used);
        if (used != s.size()) throw ConfigError("trailing characters in number '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw ConfigError("bad number '" + s + "' in reference file");
    }
}

}  // namespace

std::vector<ZeroTableRow> read_zero_reference(std::istream& is) {
    std::vector<ZeroTableRow> rows;
    for (const auto& f : csv_records(is, 8)) {
        ZeroTableRow r;
        r.M0 = parse_real(f[0]);
        r.M1 = parse_real(f[1]);
        for (int i = 0; i < 5; ++i) r.eta[i] = parse_real(f[2 + i]);
        r.rupture = parse_real(f[7]) != 0;
        rows.push_back(r);
    }
    return rows;
}

namespace {

bool same(Real a, Real b) { return std::fabs(a - b) <= 1e-12L * std::max<Real>(1, std::fabs(a)); }

}  // namespace

ZeroTableComparison compare_zero_table(const std::vector<ZeroTableRow>& computed,
                                       const std::vector<ZeroTableRow>& reference) {
    ZeroTableComparison c;
    for (const ZeroTableRow& row : computed) {
        const auto ref = std::find_if(reference.begin(), reference.end(), [&](const ZeroTableRow& r) {
            return same(r.M0, row.M0) && same(r.M1, row.M1);
        });
        std::array<Real, 5> err{};
        if (ref == reference.end()) {
            ++c.unmatched;
            err.fill(NAN);
            c.rupture_match.push_back(false);
        } else {
            for (int i = 0; i < 5; ++i) {
                err[i] = std::fabs(row.eta[i] - ref->eta[i]);
                c.max_err = std::max(c.max_err, err[i]);
            }
            c.rupture_match.push_back(row.rupture == ref->rupture);
        }
        c.abs_err.push_back(err);
    }
    return c;
}

UTableComparison compare_u_table(const std::vector<UTableRow>& computed, const std::vector<UTableRow>& reference) {
    UTableComparison c;
    for (const UTableRow& row : computed) {
        const auto ref = std::find_if(reference.begin(), reference.end(),
                                      [&](const UTableRow& r) { return same(r.M1, row.M1) && r.n == row.n; });
        if (ref == reference.end()) {
            ++c.unmatched;
            c.abs_err.emplace_back(NAN, NAN);
            continue;
        }
        const Real er = std::fabs(std::fabs(row.re_root) - std::fabs(ref->re_root));
        const Real ei = std::fabs(std::fabs(row.im_root) - std::fabs(ref->im_root));
        c.abs_err.emplace_back(er, ei);
        c.max_err = std::max({c.max_err, er, ei});
    }
    return c;
}

std::vector<Real> u_table_M1() { return {0.1L, 1, 10}; }

std::vector<int> u_table_degrees() { return {1, 3, 5, 7, 9, 11, 13, 15, 17, 19}; }

std::vector<UTableRow> compute_u_table(const FreudTable& ft, const std::vector<Real>& m1_values,
                                       const std::vector<int>& degrees) {
    const int top = *std::max_element(degrees.begin(), degrees.end());
    std::vector<UTableRow> rows;
    for (Real M1 : m1_values) {
        const SobolevTable st = build_sobolev_table(ft, {0, M1}, top);
        for (int n : degrees) {
            const URoots r = u_roots(biquartic(st, ft, n));
            rows.push_back({M1, n, r.real_root, r.imag_root});
        }
    }
    return rows;
}

std::vector<UTableRow> read_u_reference(std::istream& is) {
    std::vector<UTableRow> rows;
    for (const auto& f : csv_records(is, 4)) {
        UTableRow r;
        r.M1 = parse_real(f[0]);
        r.n = static_cast<int>(parse_real(f[1]));
        r.re_root = parse_real(f[2]);
        r.im_root = parse_real(f[3]);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace fsop
