#include "fsop/sobolev.hpp"
#include "fsop/zeros.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fsop;
using testing::rel_err;
using testing::table;

TEST_SUITE("sobolev") {

TEST_CASE("values, derivatives and norms against Gram-Schmidt") {
    const SobolevTable st = build_sobolev_table(table(), {1, 0.5L}, 14);
    for (int n = 0; n <= 12; ++n) {
        CAPTURE(n);
        const Derivs at = eval_Q(st, table(), n, 0.7L, 1);
        CHECK(std::fabs(at[0] - oracle::Q_at_0p7[n]) < 1e-16L);
        CHECK(std::fabs(eval_Q(st, table(), n, -1.1L, 1)[1] - oracle::Qd_at_m1p1[n]) < 1e-15L);
        CHECK(rel_err(st.qnorm_sq[n], oracle::Q_norm_sq[n]) < 1e-16L);
    }
}

TEST_CASE("five-term recurrence coefficients") {
    const SobolevTable st = build_sobolev_table(table(), {1, 0.5L}, 14);
    for (int n = 0; n <= 10; ++n) {
        CAPTURE(n);
        const FiveTerm f = five_term(st, n);
        CHECK(rel_err(f.lambda_nn, oracle::lambda_nn[n]) < 1e-15L);
        if (n >= 2) CHECK(rel_err(f.lambda_nm2, oracle::lambda_nm2[n]) < 1e-15L);
    }
    // lambda_00 = a_1^2 mu0 / (mu0 + M0)
    const Real mu0 = table().norm_sq_r[0];
    CHECK(rel_err(st.lambda_nn[0], table().a_sq_r[1] * mu0 / (mu0 + 1)) < 1e-17L);
}

TEST_CASE("three representations agree away from the origin") {
    const SobolevTable st = build_sobolev_table(table(), {0.3L, 2}, 12);
    for (int n = 1; n <= 12; ++n) {
        const std::vector<Real> unrolled = eval_Q_five_term(st, n, 1.3L);
        const Real k = eval_Q(st, table(), n, 1.3L)[0];
        CHECK(rel_err(eval_Q_quotient(st, table(), n, 1.3L), k) < 1e-14L);
        CHECK(rel_err(unrolled[n], k) < 1e-14L);
    }
    CHECK_THROWS_AS(eval_Q_quotient(st, table(), 3, 0), DomainError);
}

TEST_CASE("no masses gives the Freud polynomials") {
    const SobolevTable st = build_sobolev_table(table(), {0, 0}, 20);
    for (int n = 0; n <= 20; ++n) {
        CHECK(eval_Q(st, table(), n, 0.9L)[0] == doctest::Approx(static_cast<double>(eval_chain(table(), n, 0.9L).value[0])).epsilon(1e-15));
        CHECK(st.norm_ratio[n] == 1);
        CHECK(st.lambda_nn[n] == doctest::Approx(static_cast<double>(table().a_sq_r[n + 1] + table().a_sq_r[n])).epsilon(1e-15));
    }
}

TEST_CASE("even degrees ignore M1 and odd degrees ignore M0") {
    const SobolevTable a = build_sobolev_table(table(), {0.7L, 0.2L}, 10);
    const SobolevTable b = build_sobolev_table(table(), {0.7L, 5}, 10);
    const SobolevTable c = build_sobolev_table(table(), {3, 0.2L}, 10);
    for (int n = 0; n <= 10; ++n) {
        const SobolevTable& other = n % 2 ? c : b;
        CHECK(eval_Q(a, table(), n, 0.45L)[0] == eval_Q(other, table(), n, 0.45L)[0]);
    }
}

TEST_CASE("connection coefficients") {
    const SobolevTable st = build_sobolev_table(table(), {0, 1}, 9);
    const ConnectionCoeffs c = connection_coeffs(st, 7);
    CHECK(c.r == 1);
    CHECK(c.a10 < 0);
    // A10(2n+1) = -M1 K_{2n}(0,0) / (1 + M1 K^{(1,1)}_{2n-1}(0,0))
    CHECK(rel_err(c.a10, -oracle::kernel_00[6] / (1 + oracle::kernel_11[5])) < 1e-15L);
    CHECK_THROWS_AS(connection_coeffs(st, 0), DomainError);
}

TEST_CASE("orthogonality by quadrature") {
    const SobolevParams p{1, 0.5L};
    const Real g = sobolev_inner_oracle(table(), p, {PolySpec::Family::sobolev, 5}, {PolySpec::Family::sobolev, 7});
    CHECK(std::fabs(g) < 1e-15L);
    const Real h = sobolev_inner_oracle(table(), p, {PolySpec::Family::sobolev, 6}, {PolySpec::Family::sobolev, 6});
    CHECK(rel_err(h, oracle::Q_norm_sq[6]) < 1e-15L);
    CHECK_THROWS_AS(sobolev_inner_oracle(table(), p, {PolySpec::Family::sobolev, kInnerOracleCap + 1},
                                         {PolySpec::Family::freud, 0}),
                    DomainError);
}

TEST_CASE("limit polynomial J_7") {
    const ZeroSet z = limit_and_kernel_zeros(table(), 7, ZeroLabel::limit_J);
    CHECK(z.origin_multiplicity == 3);
    const std::vector<Real> pos = z.positive();
    REQUIRE(pos.size() == 2);
    for (int k = 0; k < 2; ++k) CHECK(std::fabs(pos[k] - oracle::J7_zeros[k]) < 1e-15L);
    const Derivs j0 = eval_limit_poly(table(), 7, 0, 3);
    CHECK(std::fabs(j0[1]) < 1e-15L);
    CHECK(j0[3] != 0);
    CHECK_THROWS_AS(eval_limit_poly(table(), 1, 0.3L), DomainError);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(build_sobolev_table(table(), {-1, 0}, 5), ConfigError);
    CHECK_THROWS_AS(build_sobolev_table(table(), {0, 0}, table().n_max), TableExhausted);
}

}
