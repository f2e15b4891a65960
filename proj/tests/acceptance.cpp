// Acceptance driver: one PASS/FAIL line per criterion.
//   acceptance          run all
//   acceptance 3 5      run selected criteria
#include "fsop/tables.hpp"
#include "fsop/verify.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

using namespace fsop;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool passed = false;
    std::string summary;
};

const FreudTable& shared_table() {
    static const FreudTable t = build_freud_table(210, 40);
    return t;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// Folds check rows into one outcome; the summary lists each row's measurement.
Outcome fold(const std::vector<CheckRow>& rows) {
    Outcome o{true, ""};
    for (const auto& r : rows) {
        o.passed = o.passed && (r.passed || !r.gating);
        o.summary += (o.summary.empty() ? "" : "; ") + r.name + " " + sci(r.measured) + (r.passed ? " <= " : " > ") +
                     sci(r.tolerance);
    }
    return o;
}

std::ifstream open_data(const std::string& name) {
    std::ifstream is(std::string(FSOP_DATA_DIR) + "/" + name);
    if (!is) throw ConfigError("missing reference file " + name);
    return is;
}

Outcome c1() {
    const auto t0 = Clock::now();
    const FreudTable t = build_freud_table(200, 64);
    const double dt = seconds_since(t0);
    const CheckRow r = checks::a1_certificate(t);
    return {r.passed && dt < 10, "|a_1^2 - Gamma(3/4)/Gamma(1/4)| = " + sci(r.measured) + ", build(200, 64) took " +
                                     sci(dt) + " s"};
}

Outcome c2() {
    const FreudTable t = build_freud_table(200, 64);
    return fold({checks::string_residuals(t, 199), checks::stieltjes_agreement(t, 60, 4000)});
}

Outcome zero_table(int id, const std::vector<Real>& rupture_rows, double time_limit) {
    const auto t0 = Clock::now();
    const FreudTable t = build_freud_table(30, 40);
    const auto rows = compute_zero_table(t, zero_table_M0(id), zero_table_M1(id));
    const double dt = seconds_since(t0);
    auto is = open_data("table" + std::to_string(id) + ".csv");
    const auto ref = read_zero_reference(is);
    const ZeroTableComparison c = compare_zero_table(rows, ref);
    bool pattern = true;
    for (const auto& row : rows) {
        const bool expect = std::find(rupture_rows.begin(), rupture_rows.end(), row.M1) != rupture_rows.end();
        pattern = pattern && row.rupture == expect;
    }
    const bool ok = c.unmatched == 0 && rows.size() * 5 == 20 && c.max_err <= 1e-5L && pattern && dt < time_limit;
    return {ok, "20 cells, max error " + sci(static_cast<double>(c.max_err)) + ", rupture rows " +
                    (pattern ? "match" : "DIFFER") + ", " + sci(dt) + " s"};
}

Outcome c5() {
    const auto t0 = Clock::now();
    const FreudTable t = build_freud_table(30, 40);
    const auto rows = compute_u_table(t, u_table_M1(), u_table_degrees());
    const double dt = seconds_since(t0);
    auto is = open_data("table3.csv");
    const UTableComparison c = compare_u_table(rows, read_u_reference(is));
    std::string bad;
    int n_bad = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Real e = std::max(c.abs_err[i].first, c.abs_err[i].second);
        if (!(e <= 1e-5L)) {
            ++n_bad;
            bad += " (M1=" + sci(static_cast<double>(rows[i].M1)) + ", n=" + std::to_string(rows[i].n) + ": " +
                   sci(static_cast<double>(e)) + ")";
        }
    }
    const bool ok = c.unmatched == 0 && n_bad == 0 && dt < 30;
    return {ok, "30 cells, max error " + sci(static_cast<double>(c.max_err)) + ", " + std::to_string(n_bad) +
                    " cells above 1e-5" + bad + ", " + sci(dt) + " s"};
}

Outcome c6() {
    const FreudTable& t = shared_table();
    return fold({checks::five_term_residual(t, {1, 0.5L}, 20, 101), checks::five_term_residual(t, {0.3L, 2}, 20, 101)});
}

Outcome c7() {
    std::vector<SobolevParams> grid;
    for (Real M0 : {0.0L, 0.1L, 1.0L, 10.0L})
        for (Real M1 : {0.0L, 0.1L, 1.0L, 10.0L}) grid.push_back({M0, M1});
    return fold({checks::ode_residuals(shared_table(), grid, 2, 15, 20)});
}

Outcome c8() {
    // Degrees 2n+1 for n <= 21.
    return fold({checks::closed_form_R(shared_table(), {0.1L, 1, 10}, 43)});
}

Outcome c9() { return fold({checks::electrostatics(shared_table(), {0.1L, 1, 10}, 0, 19)}); }

Outcome c10() {
    const FreudTable& t = shared_table();
    std::vector<CheckRow> rows{checks::lew_quarles_decay(t, 20, 200)};
    for (const SobolevParams& p : {SobolevParams{1, 0.5L}, SobolevParams{0.3L, 2}}) {
        auto more = checks::sobolev_decay(t, p, 20, 200);
        rows.insert(rows.end(), more.begin(), more.end());
    }
    Outcome o = fold(rows);
    o.summary += " (|fitted - expected exponent|)";
    return o;
}

Outcome c11() {
    const std::vector<Real> grid{0.03L, 0.05L, 0.09L, 0.2L, 0.5L, 1, 2, 5, 10, 100, 1000, 10000};
    return fold(checks::m1_dynamics(shared_table(), 7, grid));
}

Outcome c12() {
    std::vector<CheckRow> rows;
    for (const SobolevParams& p : {SobolevParams{1, 0.5L}, SobolevParams{0.3L, 2}})
        rows.push_back(checks::orthogonality(shared_table(), p, 12).front());
    return fold(rows);
}

Outcome c13() {
    return fold({checks::krall_interlacing_chain(shared_table(), 15, {0, 0.1L, 1, 10}, {0.1L, 1, 10})});
}

const std::map<int, std::pair<const char*, std::function<Outcome()>>>& criteria() {
    static const std::map<int, std::pair<const char*, std::function<Outcome()>>> m{
        {1, {"a_1^2 certificate", c1}},
        {2, {"string residuals and Stieltjes agreement", c2}},
        {3, {"zero table 1", [] { return zero_table(1, {0.4L, 1.0L}, 5); }}},
        {4, {"zero table 2", [] { return zero_table(2, {0.9L, 2.0L}, 1e9); }}},
        {5, {"u-root table", c5}},
        {6, {"five-term recurrence", c6}},
        {7, {"holonomic ODE residual", c7}},
        {8, {"closed-form R", c8}},
        {9, {"electrostatic equilibrium", c9}},
        {10, {"large-n decay exponents", c10}},
        {11, {"M1 -> infinity zero dynamics", c11}},
        {12, {"Sobolev orthogonality", c12}},
        {13, {"Krall interlacing chain", c13}},
    };
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    if (ids.empty())
        for (const auto& [id, _] : criteria()) ids.push_back(id);

    bool all = true;
    for (int id : ids) {
        const auto it = criteria().find(id);
        if (it == criteria().end()) {
            std::fprintf(stderr, "unknown criterion %d\n", id);
            return 2;
        }
        Outcome o;
        try {
            o = it->second.second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.passed;
        std::printf("%s  %2d  %s: %s\n", o.passed ? "PASS" : "FAIL", id, it->second.first, o.summary.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
