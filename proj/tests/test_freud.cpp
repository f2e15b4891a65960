#include "fsop/freud.hpp"
#include "fsop/zeros.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fsop;
using testing::rel_err;
using testing::table;

TEST_SUITE("freud") {

TEST_CASE("monic polynomial values and derivatives") {
    const EvalChain a = eval_chain(table(), 7, 0.6L, 3);
    const EvalChain b = eval_chain(table(), 10, -1.3L, 3);
    for (int d = 0; d <= 3; ++d) {
        CAPTURE(d);
        CHECK(rel_err(a.value[d], oracle::F7_at_0p6[d]) < 1e-15L);
        CHECK(rel_err(b.value[d], oracle::F10_at_m1p3[d]) < 1e-15L);
    }
}

TEST_CASE("high-precision evaluation agrees") {
    PrecisionGuard guard(40);
    const auto v = eval_hp(table(), 7, HpReal("0.6"));
    CHECK(rel_err(to_real(v[0]), oracle::F7_at_0p6[0]) < 1e-18L);
}

TEST_CASE("parity and boundary values") {
    const BoundaryValues bv = boundary_values(table(), 40);
    for (int n = 0; n <= 40; ++n) {
        if (n % 2) {
            CHECK(bv.f0[n] == 0);
            CHECK(bv.f1[n] != 0);
        } else {
            CHECK(bv.f1[n] == 0);
            CHECK(bv.f0[n] != 0);
        }
    }
    const Derivs plus = eval_chain(table(), 9, 0.37L, 0).value;
    const Derivs minus = eval_chain(table(), 9, -0.37L, 0).value;
    CHECK(plus[0] == -minus[0]);
}

TEST_CASE("kernels against moment-based sums") {
    CHECK(rel_err(kernel(table(), 6, 0.4L, -0.7L), oracle::kernel_6_0p4_m0p7[0]) < 1e-15L);
    // diagonal branch
    CHECK(kernel(table(), 6, 0.5L, 0.5L) > 0);
    for (int n = 0; n <= 10; ++n) {
        CAPTURE(n);
        const KernelValues k = kernel_at_zero(table(), n);
        CHECK(rel_err(k.k00, oracle::kernel_00[n]) < 1e-16L);
        if (n > 0) CHECK(rel_err(k.k11, oracle::kernel_11[n]) < 1e-16L);
        const KernelValues c = kernel_at_zero_confluent(table(), n);
        CHECK(rel_err(c.k00, oracle::kernel_00[n]) < 1e-15L);
    }
    const KernelZeroTable kz = kernel_zero_table(table(), boundary_values(table(), 20));
    CHECK(rel_err(kz.k11[9], oracle::kernel_11[9]) < 1e-16L);
    const KernelX0 kx = kernel_x0(table(), 9, 0.8L);
    CHECK(rel_err(kx.k01[0], oracle::kernel01_9_at_0p8[0]) < 1e-15L);
    const KernelX0 kq = kernel_x0_quotient(table(), 9, 0.8L);
    CHECK(rel_err(kq.k01[0], oracle::kernel01_9_at_0p8[0]) < 1e-13L);
    CHECK_THROWS_AS(kernel_x0_quotient(table(), 9, 0), DomainError);
}

TEST_CASE("Freud zeros") {
    const ZeroSet z = freud_zeros(table(), 9);
    REQUIRE(z.zeros.size() == 9);
    for (int i = 0; i < 9; ++i) CHECK(std::fabs(z.zeros[i] - oracle::F9_zeros[i]) < 1e-17L);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(eval_chain(table(), -1, 0), DomainError);
    CHECK_THROWS_AS(eval_chain(table(), table().n_max + 1, 0), TableExhausted);
    CHECK_THROWS_AS(eval_chain(table(), 3, 0, 4), DomainError);
}

}
