#include "fsop/report.hpp"
#include "fsop/table_io.hpp"
#include "fsop/tables.hpp"
#include "fsop/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>

using namespace fsop;

namespace {

enum Exit { kPass = 0, kVerifyFailed = 1, kUsage = 2, kNumeric = 3 };

struct RunConfig {
    int n_max = 210;
    int precision = 40;
    std::string format = "csv";
    std::string out;
    std::string cache;
    std::vector<std::string> tol_overrides;
    bool full_precision = false;

    std::vector<Real> M0, M1, M1_grid;
    int n = 0;
    std::string n_odd;

    Format fmt() const { return format_from_string(format); }
    std::string real(Real v) const { return format_real(v, full_precision); }
};

std::map<std::string, double> parse_overrides(const std::vector<std::string>& items) {
    std::map<std::string, double> out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw ConfigError("--tol-override expects KEY=VAL, got '" + item + "'");
        double v = 0;
        try {
            v = std::stod(item.substr(eq + 1));
        } catch (const std::logic_error&) {
            throw ConfigError("bad tolerance value in '" + item + "'");
        }
        if (!(v > 0)) throw ConfigError("tolerances must be positive: '" + item + "'");
        out[item.substr(0, eq)] = v;
    }
    return out;
}

// Paired (M0, M1) points; a single value broadcasts against the other list.
std::vector<SobolevParams> mass_points(const RunConfig& c) {
    if (c.M0.empty() && c.M1.empty()) return {};
    const std::vector<Real> m0 = c.M0.empty() ? std::vector<Real>{0} : c.M0;
    const std::vector<Real> m1 = c.M1.empty() ? std::vector<Real>{0} : c.M1;
    if (m0.size() != m1.size() && m0.size() != 1 && m1.size() != 1)
        throw ConfigError("--M0 and --M1 lists must have equal length or one value");
    std::vector<SobolevParams> ps;
    for (std::size_t i = 0; i < std::max(m0.size(), m1.size()); ++i) {
        const Real a = m0[m0.size() == 1 ? 0 : i], b = m1[m1.size() == 1 ? 0 : i];
        if (a < 0 || b < 0) throw ConfigError("masses must be nonnegative");
        ps.push_back({a, b});
    }
    return ps;
}

// "1..19" (odd degrees in range), "7" or "1,3,5".
std::vector<int> parse_odd_degrees(const std::string& s) {
    std::vector<int> out;
    std::smatch m;
    if (std::regex_match(s, m, std::regex(R"((\d+)\.\.(\d+))"))) {
        const int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
        for (int n = lo; n <= hi; ++n)
            if (n % 2 == 1) out.push_back(n);
    } else {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!std::regex_match(item, std::regex(R"(\d+)"))) throw ConfigError("bad degree list '" + s + "'");
            out.push_back(std::stoi(item));
        }
    }
    for (int n : out)
        if (n % 2 == 0) throw ConfigError("degree " + std::to_string(n) + " is not odd");
    if (out.empty()) throw ConfigError("empty degree list '" + s + "'");
    return out;
}

FreudTable obtain_table(const RunConfig& c, int needed) {
    const int n_max = std::max(c.n_max, needed);
    if (!c.cache.empty() && std::filesystem::exists(c.cache)) {
        FreudTable t = load_table(c.cache);
        if (t.n_max >= n_max && t.precision_digits >= c.precision) return t;
        std::cerr << "cache " << c.cache << " too small (n_max " << t.n_max << ", " << t.precision_digits
                  << " digits); rebuilding\n";
    }
    FreudTable t = build_freud_table(n_max, c.precision);
    if (!c.cache.empty()) save_table(c.cache, t);
    return t;
}

void emit(const RunConfig& c, const Report& r, std::optional<Format> force = std::nullopt) {
    const Format f = force ? *force : c.fmt();
    if (c.out.empty()) {
        write_report(std::cout, r, f);
        return;
    }
    std::ofstream os(c.out);
    if (!os) throw ConfigError("cannot open " + c.out + " for writing");
    write_report(os, r, f);
}

int cmd_build(const RunConfig& c) {
    const FreudTable t = build_freud_table(c.n_max, c.precision);
    const std::string path = !c.out.empty() ? c.out : c.cache;
    if (path.empty()) throw ConfigError("build needs --out or --cache");
    save_table(path, t);
    std::cout << "wrote " << path << ": n_max " << t.n_max << ", " << t.precision_digits << " digits, max string residual "
              << string_residual(t, t.n_max - 1).convert_to<double>() << " at n = " << t.n_max - 1 << '\n';
    return kPass;
}

int cmd_zero_table(const RunConfig& c, int id, const std::string& reference, bool json) {
    const FreudTable ft = obtain_table(c, 20);
    const Real M0 = c.M0.empty() ? zero_table_M0(id) : c.M0.front();
    std::vector<Real> m1s;
    if (c.M1.empty())
        m1s = zero_table_M1(id);
    else
        m1s = c.M1;
    const auto rows = compute_zero_table(ft, M0, m1s);

    std::optional<ZeroTableComparison> cmp;
    if (!reference.empty()) {
        std::ifstream is(reference);
        if (!is) throw ConfigError("cannot read reference file " + reference);
        cmp = compare_zero_table(rows, read_zero_reference(is));
    }

    Report r;
    r.name = "table" + std::to_string(id);
    r.add_column("M0");
    r.add_column("M1");
    for (const char* col : kZeroTableColumns) r.add_column(col);
    r.add_column("rupture");
    r.add_column("marker", false);
    if (cmp) {
        for (const char* col : kZeroTableColumns) r.add_column(std::string("err_") + col);
        r.add_column("rupture_match");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ZeroTableRow& row = rows[i];
        std::vector<std::string> cells{c.real(row.M0), c.real(row.M1)};
        std::string marker;
        for (int k = 0; k < 5; ++k) {
            cells.push_back(c.real(row.eta[k]));
            if (row.flagged[k]) marker += (marker.empty() ? "" : ";") + std::string(kZeroTableColumns[k]);
        }
        cells.push_back(row.rupture ? "1" : "0");
        cells.push_back(marker);
        if (cmp) {
            for (int k = 0; k < 5; ++k) cells.push_back(format_general(cmp->abs_err[i][k], c.full_precision));
            cells.push_back(cmp->rupture_match[i] ? "1" : "0");
        }
        r.add_row(std::move(cells));
    }
    emit(c, r, json ? std::optional<Format>(Format::json) : std::nullopt);
    if (!cmp) return kPass;
    const auto ov = parse_overrides(c.tol_overrides);
    const double tol = ov.count("table") ? ov.at("table") : 1e-5;
    const bool ok = cmp->unmatched == 0 && cmp->max_err <= tol &&
                    std::all_of(cmp->rupture_match.begin(), cmp->rupture_match.end(), [](bool b) { return b; });
    std::cerr << "max |computed - reference| = " << static_cast<double>(cmp->max_err) << " (tolerance " << tol
              << "), unmatched rows " << cmp->unmatched << '\n';
    return ok ? kPass : kVerifyFailed;
}

int cmd_u_table(const RunConfig& c, const std::string& reference, bool json) {
    const FreudTable ft = obtain_table(c, 25);
    std::vector<Real> m1s;
    if (c.M1.empty())
        m1s = u_table_M1();
    else
        m1s = c.M1;
    const std::vector<int> degrees = c.n_odd.empty() ? u_table_degrees() : parse_odd_degrees(c.n_odd);
    const auto rows = compute_u_table(ft, m1s, degrees);

    std::optional<UTableComparison> cmp;
    if (!reference.empty()) {
        std::ifstream is(reference);
        if (!is) throw ConfigError("cannot read reference file " + reference);
        cmp = compare_u_table(rows, read_u_reference(is));
    }
    Report r;
    r.name = "table3";
    for (const char* col : {"M1", "n", "re_root", "im_root"}) r.add_column(col);
    if (cmp) {
        r.add_column("err_re");
        r.add_column("err_im");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<std::string> cells{c.real(rows[i].M1), std::to_string(rows[i].n), c.real(rows[i].re_root),
                                       c.real(rows[i].im_root)};
        if (cmp) {
            cells.push_back(format_general(cmp->abs_err[i].first, c.full_precision));
            cells.push_back(format_general(cmp->abs_err[i].second, c.full_precision));
        }
        r.add_row(std::move(cells));
    }
    emit(c, r, json ? std::optional<Format>(Format::json) : std::nullopt);
    if (!cmp) return kPass;
    const auto ov = parse_overrides(c.tol_overrides);
    const double tol = ov.count("table") ? ov.at("table") : 1e-5;
    std::cerr << "max |computed - reference| = " << static_cast<double>(cmp->max_err) << " (tolerance " << tol
              << "), unmatched rows " << cmp->unmatched << '\n';
    return cmp->unmatched == 0 && cmp->max_err <= tol ? kPass : kVerifyFailed;
}

int cmd_verify(const RunConfig& c, const std::string& suite) {
    VerifyConfig vc;
    vc.params = mass_points(c);
    vc.n = c.n;
    vc.tolerance_overrides = parse_overrides(c.tol_overrides);
    const FreudTable ft = obtain_table(c, 0);
    const auto rows = verify_suite(suite, ft, vc);

    Report r;
    r.name = "verify_" + suite;
    r.add_column("suite", false);
    r.add_column("check", false);
    r.add_column("status", false);
    r.add_column("measured");
    r.add_column("tolerance");
    r.add_column("detail", false);
    for (const CheckRow& row : rows) {
        const std::string status = row.passed ? "pass" : (row.gating ? "FAIL" : "info");
        r.add_row({row.suite, row.name, status, format_general(row.measured, c.full_precision),
                   format_general(row.tolerance, c.full_precision),
                   row.detail});
    }
    emit(c, r);
    return all_passed(rows) ? kPass : kVerifyFailed;
}

int cmd_export(const RunConfig& c, const std::string& kind, double x_min, double x_max, int points) {
    Report r;
    r.name = kind;
    if (kind == "zero_trajectories") {
        const int n = c.n > 0 ? c.n : 5;
        const FreudTable ft = obtain_table(c, n + 4);
        const Real M0 = c.M0.empty() ? 0 : c.M0.front();
        if (c.M1_grid.empty()) throw ConfigError("zero_trajectories needs --M1-grid");
        for (const char* col : {"M1", "k", "eta"}) r.add_column(col);
        for (Real M1 : c.M1_grid) {
            const SobolevTable st = build_sobolev_table(ft, {M0, M1}, n);
            const ZeroSet z = q_zeros(st, ft, n);
            for (std::size_t k = 0; k < z.zeros.size(); ++k)
                r.add_row({c.real(M1), std::to_string(k + 1), c.real(z.zeros[k])});
        }
    } else if (kind == "polynomials") {
        const int n = c.n > 0 ? c.n : 5;
        const FreudTable ft = obtain_table(c, n + 4);
        const auto ps = mass_points(c);
        const SobolevParams p = ps.empty() ? SobolevParams{} : ps.front();
        const SobolevTable st = build_sobolev_table(ft, p, n);
        const bool has_limit = n >= 2 && !(n % 2 == 1 && n < 3);
        r.add_column("x");
        r.add_column("F");
        r.add_column("Q");
        if (has_limit) r.add_column(n % 2 ? "J" : "G");
        for (int i = 0; i < points; ++i) {
            const Real x = points == 1 ? x_min : x_min + (x_max - x_min) * Real(i) / (points - 1);
            std::vector<std::string> cells{c.real(x), c.real(eval_chain(ft, n, x).value[0]),
                                           c.real(eval_Q(st, ft, n, x)[0])};
            if (has_limit) cells.push_back(c.real(eval_limit_poly(ft, n, x)[0]));
            r.add_row(std::move(cells));
        }
    } else if (kind == "u_roots") {
        const std::vector<int> degrees = c.n_odd.empty() ? u_table_degrees() : parse_odd_degrees(c.n_odd);
        const FreudTable ft = obtain_table(c, degrees.back() + 4);
        const std::vector<Real> m1s = c.M1.empty() ? std::vector<Real>{1} : c.M1;
        for (const char* col : {"M1", "n", "re_root", "im_root"}) r.add_column(col);
        for (const UTableRow& row : compute_u_table(ft, m1s, degrees))
            r.add_row({c.real(row.M1), std::to_string(row.n), c.real(row.re_root), c.real(row.im_root)});
    } else if (kind == "potential") {
        const int n = c.n_odd.empty() ? (c.n > 0 ? c.n : 5) : parse_odd_degrees(c.n_odd).front();
        if (n % 2 == 0) throw ConfigError("potential needs an odd degree");
        const FreudTable ft = obtain_table(c, n + 4);
        const auto ps = mass_points(c);
        const SobolevParams p = ps.empty() ? SobolevParams{0, 1} : ps.front();
        const SobolevTable st = build_sobolev_table(ft, p, n);
        const Biquartic u = biquartic(st, ft, n);
        r.add_column("x");
        r.add_column("V_ext");
        for (int i = 0; i < points; ++i) {
            const Real x = points == 1 ? x_min : x_min + (x_max - x_min) * Real(i) / (points - 1);
            if (x == 0) continue;  // singular
            const Real v = external_potential(u, x);
            if (std::isfinite(v)) r.add_row({c.real(x), c.real(v)});
        }
    } else {
        throw ConfigError("unknown plot kind '" + kind + "'");
    }
    emit(c, r);
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Freud and Sobolev-type orthogonal polynomials for the weight exp(-x^4)"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig c;
    app.add_option("--n-max", c.n_max, "Largest degree in the coefficient table")->check(CLI::Range(4, 100000));
    app.add_option("--precision", c.precision, "Working decimal digits")->check(CLI::Range(20, 2000));
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "tsv", "json"}));
    app.add_option("--out", c.out, "Output file (default stdout)");
    app.add_option("--cache", c.cache, "Coefficient table cache file");
    app.add_option("--tol-override", c.tol_overrides, "Tolerance override KEY=VAL")->take_all();
    app.add_flag("--full-precision", c.full_precision, "Print all digits instead of 6 decimals");
    auto mass_options = [&](CLI::App* sub) {
        sub->add_option("--M0", c.M0, "Mass at the origin (list pairs with --M1)")->delimiter(',');
        sub->add_option("--M1", c.M1, "Derivative mass at the origin")->delimiter(',');
    };

    auto* build = app.add_subcommand("build", "Build and cache the Freud coefficient table");

    int table_id = 1;
    std::string reference;
    bool emit_json = false;
    auto* table = app.add_subcommand("table", "Zero tables 1, 2 and the u-root table 3");
    table->add_option("--id", table_id, "Table number")->required()->check(CLI::IsMember({1, 2, 3}));
    table->add_option("--reference", reference, "Reference CSV to compare against");
    table->add_flag("--emit-json", emit_json, "Write JSON regardless of --format");
    table->add_option("--n-odd", c.n_odd, "Odd degrees for table 3, e.g. 1..19");
    mass_options(table);

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run property suites");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"coeffs", "freud", "sobolev", "zeros", "holonomic", "all"}));
    verify->add_option("--n", c.n, "Restrict degree-dependent checks to one degree")->check(CLI::PositiveNumber);
    mass_options(verify);

    std::string kind;
    double x_min = -2.5, x_max = 2.5;
    int points = 201;
    auto* plot = app.add_subcommand("export-plot", "Write plot data");
    plot->add_option("--kind", kind)->required()->check(
        CLI::IsMember({"zero_trajectories", "polynomials", "u_roots", "potential"}));
    plot->add_option("--n", c.n, "Degree")->check(CLI::PositiveNumber);
    plot->add_option("--n-odd", c.n_odd, "Odd degrees, e.g. 1..19");
    plot->add_option("--M1-grid", c.M1_grid, "Comma-separated M1 values")->delimiter(',');
    plot->add_option("--x-min", x_min);
    plot->add_option("--x-max", x_max);
    plot->add_option("--points", points)->check(CLI::Range(1, 1000000));
    mass_options(plot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*build) return cmd_build(c);
        if (*table) return table_id == 3 ? cmd_u_table(c, reference, emit_json)
                                         : cmd_zero_table(c, table_id, reference, emit_json);
        if (*verify) return cmd_verify(c, suite);
        if (*plot) return cmd_export(c, kind, x_min, x_max, points);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kNumeric;
    }
    return kUsage;
}
