#include "fsop/holonomic.hpp"
#include "fsop/tables.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

#include <doctest.h>

#include <fstream>

using namespace fsop;
using testing::rel_err;
using testing::table;

TEST_SUITE("holonomic") {

TEST_CASE("u roots against moment-based Sobolev norms") {
    const auto rows = compute_u_table(table(), u_table_M1(), u_table_degrees());
    REQUIRE(rows.size() == 30);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(i);
        CHECK(rel_err(rows[i].re_root, oracle::table3[2 * i]) < 1e-13L);
        CHECK(rel_err(rows[i].im_root, oracle::table3[2 * i + 1]) < 1e-15L);
    }
}

TEST_CASE("u roots: reference cells up to degree 11 within six decimals") {
    std::ifstream is(testing::data_file("table3.csv"));
    REQUIRE(is);
    const auto ref = read_u_reference(is);
    const auto rows = compute_u_table(table(), u_table_M1(), {1, 3, 5, 7, 9, 11});
    const UTableComparison c = compare_u_table(rows, ref);
    CHECK(c.unmatched == 0);
    CHECK(c.max_err < 1e-5L);
}

TEST_CASE("biquartic signs and z roots") {
    const SobolevTable st = build_sobolev_table(table(), {0, 1}, 21);
    for (int n = 1; n <= 21; n += 2) {
        const Biquartic u = biquartic(st, table(), n);
        const URoots r = u_roots(u);
        CHECK(u.u4 > 0);
        CHECK(r.z_plus > 0);
        CHECK(r.z_minus < 0);
        CHECK(r.residual_real <= 1e-12L * r.scale);
    }
    CHECK_THROWS_AS(biquartic(st, table(), 4), DomainError);
    CHECK_THROWS_AS(u_roots(1, 0, 1), UnexpectedRegime);     // z^2 + 1
    CHECK_THROWS_AS(u_roots(1, -3, 2), UnexpectedRegime);    // roots 1, 2
    CHECK_THROWS_AS(u_roots(0, 1, 1), DomainError);
}

TEST_CASE("two-term expansions evaluated term by term") {
    const ZAsymptotics z = z_asymptotics(1);
    const Real s = std::sqrt(1.5L);
    CHECK(rel_err(z.z_plus, s * (27.0L / 64 - 243.0L / 512)) < 1e-17L);
    CHECK(rel_err(z.z_minus, -std::sqrt(2.0L / 3) - s / 4) < 1e-17L);
    CHECK(z_asymptotics(2).z_plus > 0);
    CHECK_THROWS_AS(z_asymptotics(0), DomainError);
}

TEST_CASE("ladder and ODE at one mass point") {
    const SobolevTable st = build_sobolev_table(table(), {1, 0.5L}, 12);
    for (int n : {2, 3, 8, 9}) {
        CAPTURE(n);
        const LadderSystem ls = ladder_system(st, table(), n);
        CHECK(ls.u.has_value() == (n % 2 == 1));
        const OdeCoeffs ode = ode_coeffs(ls);
        for (Real x : pole_avoiding_samples(ode_poles(ode), 7, -2, 2)) {
            CHECK(lowering_residual(ls, st, table(), x).relative() < 1e-14L);
            CHECK(raising_residual(ls, st, table(), x).relative() < 1e-14L);
            CHECK(ode_residual(ode, st, table(), x).relative() < 1e-10L);
        }
        if (n % 2) CHECK(rational_distance(ode.R, closed_form_R(*ls.u)) < 1e-14L);
    }
    CHECK_THROWS_AS(ladder_system(st, table(), 1), DomainError);
}

TEST_CASE("pole-avoiding samples") {
    const std::vector<Real> poles{-0.5L, 0, 0.5L};
    const auto xs = pole_avoiding_samples(poles, 30, -1, 1, 0.05L);
    REQUIRE(xs.size() == 30);
    for (Real x : xs)
        for (Real p : poles) CHECK(std::fabs(x - p) >= 0.05L);
    CHECK_THROWS_AS(pole_avoiding_samples(poles, 3, 1, -1), DomainError);
}

TEST_CASE("electrostatic equilibrium") {
    const SobolevTable st = build_sobolev_table(table(), {0, 1}, 19);
    for (int n : {5, 11, 19}) {
        const ElectrostaticResult e = electrostatic_residual(st, table(), n);
        CHECK(e.zeros.size() == static_cast<std::size_t>(n - 1));
        CHECK(e.max_relative() < 1e-12L);
    }
    const Biquartic u = biquartic(st, table(), 5);
    CHECK(external_potential(u, 0.8L) == external_potential(u, -0.8L));
    CHECK_THROWS_AS(external_potential(u, 0), DomainError);
}

TEST_CASE("u-root CSV") {
    const SobolevTable st = build_sobolev_table(table(), {0, 1}, 9);
    std::ostringstream os;
    write_u_roots_csv(os, {{1, u_roots(biquartic(st, table(), 9))}});
    CHECK(os.str() == "M1,n,re_root,im_root\n1,9,0.076318,1.349456\n");
}

}
