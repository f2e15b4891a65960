#include "fsop/coeffs.hpp"
#include "fsop/table_io.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace fsop;
using testing::table;

TEST_SUITE("coeffs") {

TEST_CASE("gamma constants match the reference to working precision") {
    const GammaConstants g = gamma_constants(60);
    PrecisionGuard guard(60);
    const HpReal want("3.62560990822190831193068515586767200299516768288006546743338");
    CHECK(abs(g.gamma_quarter - want) < HpReal("1e-55"));
    CHECK(abs(g.a1_sq_exact * g.gamma_quarter - g.gamma_three_quarter) < HpReal("1e-55"));
    CHECK(abs(g.mu0 - g.gamma_quarter / 2) < HpReal("1e-55"));
}

TEST_CASE("Newton table reproduces moment-based coefficients") {
    const FreudTable& t = table();
    for (int n = 1; n <= 20; ++n) {
        CAPTURE(n);
        CHECK(testing::rel_err(t.a_sq_r[n], oracle::a_sq[n]) < 1e-17L);
    }
    for (int n = 0; n <= 10; ++n) CHECK(testing::rel_err(t.norm_sq_r[n], oracle::norm_sq[n]) < 1e-17L);
}

TEST_CASE("first two coefficients") {
    const FreudTable& t = table();
    CHECK(std::fabs(t.a_sq_r[1] - 0.337989120033642364L) < 1e-17L);
    // string equation at n = 1: 4 a_1^2 (a_2^2 + a_1^2) = 1
    const Real a1 = t.a_sq_r[1];
    CHECK(std::fabs(t.a_sq_r[2] - (1 / (4 * a1) - a1)) < 1e-17L);
    CHECK(std::fabs(t.a_sq_r[2] - 0.401679659763517L) < 1e-14L);
}

TEST_CASE("string equation residuals") {
    const FreudTable& t = table();
    for (int n = 1; n < t.n_max; ++n) CHECK(to_real(string_residual(t, n)) <= 1e-12L * n);
    CHECK_THROWS_AS(string_residual(t, t.n_max), TableExhausted);
}

TEST_CASE("forward recursion at high precision agrees with Newton") {
    const FreudTable f = build_forward_table(40, 30);
    const FreudTable& t = table();
    for (int n = 1; n <= 40; ++n) CHECK(testing::rel_err(f.a_sq_r[n], t.a_sq_r[n]) < 1e-17L);
}

TEST_CASE("Stieltjes oracle agrees") {
    const FreudTable s = stieltjes_oracle(40, 2000);
    for (int n = 1; n <= 40; ++n) CHECK(std::fabs(s.a_sq_r[n] - table().a_sq_r[n]) < 1e-12L);
    CHECK_THROWS_AS(stieltjes_oracle(61, 2000), ConfigError);
    CHECK_THROWS_AS(stieltjes_oracle(10, 10), ConfigError);
}

TEST_CASE("Lew-Quarles estimate") {
    CHECK(lew_quarles_estimate(1) == doctest::Approx(std::sqrt(1.0 / 12) * (1 + 1.0 / 24)));
    const FreudTable& t = table();
    for (int n : {50, 100, 200}) {
        const double est = lew_quarles_estimate(n);
        CHECK(std::fabs(static_cast<double>(t.a_sq_r[n]) - est) / est < 1e-7);
    }
    CHECK_THROWS_AS(lew_quarles_estimate(0), DomainError);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(build_freud_table(1, 40), ConfigError);
    CHECK_THROWS_AS(build_freud_table(20, 8), ConfigError);
    CHECK_THROWS_AS(method_from_string("secant"), ConfigError);
    CHECK(method_from_string(to_string(Method::stieltjes)) == Method::stieltjes);
}

TEST_CASE("table cache round-trips byte for byte") {
    const FreudTable t = build_freud_table(30, 32);
    std::ostringstream first;
    write_table(first, t);
    std::istringstream in(first.str());
    const FreudTable back = read_table(in);
    std::ostringstream second;
    write_table(second, back);
    CHECK(first.str() == second.str());
    CHECK(back.n_max == t.n_max);
    for (int n = 0; n <= t.n_max; ++n) CHECK(back.a_sq_r[n] == t.a_sq_r[n]);

    std::istringstream junk("not a table\n");
    CHECK_THROWS_AS(read_table(junk), ConfigError);
}

}
