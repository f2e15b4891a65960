#include "fsop/tables.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

#include <doctest.h>

#include <fstream>

using namespace fsop;
using testing::table;

namespace {

void check_zero_table(int id, const long double* want) {
    const auto rows = compute_zero_table(table(), zero_table_M0(id), zero_table_M1(id));
    REQUIRE(rows.size() == 4);
    for (int r = 0; r < 4; ++r)
        for (int k = 0; k < 5; ++k) {
            CAPTURE(r);
            CAPTURE(k);
            CHECK(std::fabs(rows[r].eta[k] - want[5 * r + k]) < 1e-15L);
        }
}

}  // namespace

TEST_SUITE("zeros") {

TEST_CASE("zero tables against Gram-Schmidt roots") {
    check_zero_table(1, oracle::table1);
    check_zero_table(2, oracle::table2);
}

TEST_CASE("zero tables against the six-decimal reference files") {
    for (int id : {1, 2}) {
        std::ifstream is(testing::data_file("table" + std::to_string(id) + ".csv"));
        REQUIRE(is);
        const auto ref = read_zero_reference(is);
        const auto rows = compute_zero_table(table(), zero_table_M0(id), zero_table_M1(id));
        const ZeroTableComparison c = compare_zero_table(rows, ref);
        CHECK(c.unmatched == 0);
        CHECK(c.max_err < 1e-5L);
        for (bool m : c.rupture_match) CHECK(m);
    }
}

TEST_CASE("rupture cells are the outer Q_5 zeros") {
    const auto rows = compute_zero_table(table(), 0, {0.4L});
    CHECK(rows[0].rupture);
    CHECK(rows[0].flagged[0]);
    CHECK(!rows[0].flagged[2]);
    CHECK(rows[0].flagged[4]);
    CHECK(!compute_zero_table(table(), 0, {0.2L})[0].rupture);
}

TEST_CASE("root search on a known odd function") {
    // x (x^2 - 1)(x^2 - 4) = x^5 - 5x^3 + 4x
    const DerivFn f = [](Real x, int d) {
        Derivs v{};
        v[0] = ((x * x - 5) * x * x + 4) * x;
        if (d >= 1) v[1] = (5 * x * x - 15) * x * x + 4;
        if (d >= 2) v[2] = (20 * x * x - 30) * x;
        if (d >= 3) v[3] = 60 * x * x - 30;
        return v;
    };
    const PositiveRoots r = find_positive_roots(f, 1, 2, {0.5L, 1.5L, 2.5L}, "quintic");
    REQUIRE(r.roots.size() == 2);
    CHECK(std::fabs(r.roots[0] - 1) < 1e-17L);
    CHECK(std::fabs(r.roots[1] - 2) < 1e-17L);
    // A seed exactly on a root is counted once.
    const PositiveRoots on = find_positive_roots(f, 1, 2, {1, 2}, "quintic");
    CHECK(on.roots.size() == 2);
    CHECK_THROWS_AS(find_positive_roots(f, 1, 3, {1.5L}, "quintic"), BracketingFailure);
}

TEST_CASE("Q zeros are simple, symmetric and in the Krall chain") {
    const SobolevTable st = build_sobolev_table(table(), {0, 1}, 9);
    const ZeroSet q = q_zeros(st, table(), 9);
    REQUIRE(q.zeros.size() == 9);
    const ZeroSet f = freud_zeros(table(), 9);
    const std::vector<Real> eta = q.positive(), x = f.positive();
    std::vector<Real> y{0};
    for (Real v : limit_and_kernel_zeros(table(), 9, ZeroLabel::limit_J).positive()) y.push_back(v);
    for (std::size_t k = 0; k < x.size(); ++k) {
        CHECK(y[k] < eta[k]);
        CHECK(eta[k] < x[k]);
        if (k + 1 < y.size()) CHECK(x[k] < y[k + 1]);
    }
}

TEST_CASE("large-M1 constants") {
    std::vector<Real> grid{0.03L, 0.1L, 1, 10, 100, 1000, 10000};
    const M1Sweep s = m1_sweep(table(), 7, grid);
    REQUIRE(s.trajectories.size() == 3);
    for (int k = 0; k < 3; ++k) {
        const ZeroTrajectory& t = s.trajectories[k];
        CAPTURE(k);
        CHECK(t.decreasing);
        CHECK(testing::rel_err(t.predicted_constant, oracle::m1_constants[k]) < 1e-12L);
        CHECK(testing::rel_err(t.fitted_constant, oracle::m1_constants[k]) < 0.05L);
        CHECK(t.limit_error_sq < 1e-6L);
    }
}

TEST_CASE("zero CSV output") {
    std::ostringstream os;
    write_zero_csv(os, {freud_zeros(table(), 3)});
    CHECK(os.str().rfind("label,n,M0,M1,k,zero,residual\n", 0) == 0);
    CHECK(os.str().find("freud,3,") != std::string::npos);
}

}
