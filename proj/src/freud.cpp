#include "fsop/freud.hpp"

#include <cmath>

namespace fsop {

namespace {

void check_degree(const FreudTable& t, int n) {
    if (n < 0) throw DomainError("negative degree");
    if (n > t.n_max) throw TableExhausted(n, t.n_max);
}

constexpr Real kSwitchThreshold = 1e-6L;

}  // namespace

void eval_all(const FreudTable& t, int n, Real x, int max_deriv, std::vector<Derivs>& out) {
    check_degree(t, n);
    if (max_deriv < 0 || max_deriv > kMaxDeriv) throw DomainError("max_deriv must be in 0..3");
    out.assign(static_cast<std::size_t>(n) + 1, Derivs{});
    out[0][0] = 1;
    if (n == 0) return;
    out[1][0] = x;
    if (max_deriv >= 1) out[1][1] = 1;
    const auto& a = t.a_sq_r;
    for (int k = 1; k < n; ++k) {
        const Derivs& cur = out[k];
        const Derivs& prv = out[k - 1];
        Derivs& nxt = out[k + 1];
        nxt[0] = x * cur[0] - a[k] * prv[0];
        for (int j = 1; j <= max_deriv; ++j) nxt[j] = j * cur[j - 1] + x * cur[j] - a[k] * prv[j];
    }
}

EvalChain eval_chain(const FreudTable& t, int n, Real x, int max_deriv) {
    std::vector<Derivs> all;
    eval_all(t, n, x, max_deriv, all);
    EvalChain c;
    c.n = n;
    c.x = x;
    c.max_deriv = max_deriv;
    c.value = all[n];
    if (n > 0) c.prev = all[n - 1];
    if (n + 1 <= t.n_max) c.phi = phi(t, n, x);
    return c;
}

std::array<HpReal, kMaxDeriv + 1> eval_hp(const FreudTable& t, int n, const HpReal& x) {
    check_degree(t, n);
    PrecisionGuard guard(static_cast<unsigned>(t.precision_digits));
    using Row = std::array<HpReal, kMaxDeriv + 1>;
    Row prv{HpReal(1), HpReal(0), HpReal(0), HpReal(0)};
    if (n == 0) return prv;
    Row cur{x, HpReal(1), HpReal(0), HpReal(0)};
    for (int k = 1; k < n; ++k) {
        Row nxt;
        nxt[0] = x * cur[0] - t.a_sq[k] * prv[0];
        for (int j = 1; j <= kMaxDeriv; ++j) nxt[j] = j * cur[j - 1] + x * cur[j] - t.a_sq[k] * prv[j];
        prv = std::move(cur);
        cur = std::move(nxt);
    }
    return cur;
}

Real phi(const FreudTable& t, int n, Real x) {
    check_degree(t, n + 1);
    return t.a_sq_r[n + 1] + t.a_sq_r[n] + x * x;
}

BoundaryValues boundary_values(const FreudTable& t, int n_max) {
    check_degree(t, n_max);
    const auto& a = t.a_sq_r;
    BoundaryValues bv;
    const auto size = static_cast<std::size_t>(n_max) + 1;
    bv.f0.assign(size, 0);
    bv.f1.assign(size, 0);
    bv.f2.assign(size, 0);
    bv.f3.assign(size, 0);
    bv.f0[0] = 1;
    if (n_max >= 1) bv.f1[1] = 1;
    for (int k = 1; k < n_max; ++k) {
        // Parity: only the surviving derivative orders are propagated, the
        // others stay exactly zero.
        if ((k + 1) % 2 == 0) {
            bv.f0[k + 1] = -a[k] * bv.f0[k - 1];
            bv.f2[k + 1] = 2 * bv.f1[k] - a[k] * bv.f2[k - 1];
        } else {
            bv.f1[k + 1] = bv.f0[k] - a[k] * bv.f1[k - 1];
            bv.f3[k + 1] = 3 * bv.f2[k] - a[k] * bv.f3[k - 1];
        }
    }
    return bv;
}

Real kernel(const FreudTable& t, int n, Real x, Real y) {
    check_degree(t, n + 1);
    if (std::fabs(x - y) < kSwitchThreshold * (1 + std::fabs(x))) {
        std::vector<Derivs> fx, fy;
        eval_all(t, n, x, 0, fx);
        eval_all(t, n, y, 0, fy);
        Real sum = 0;
        for (int k = 0; k <= n; ++k) sum += fx[k][0] * fy[k][0] / t.norm_sq_r[k];
        return sum;
    }
    const EvalChain cx = eval_chain(t, n + 1, x);
    const EvalChain cy = eval_chain(t, n + 1, y);
    // cx.value = F_{n+1}(x), cx.prev = F_n(x)
    return (cx.value[0] * cy.prev[0] - cy.value[0] * cx.prev[0]) / ((x - y) * t.norm_sq_r[n]);
}

KernelValues kernel_at_zero(const FreudTable& t, int n) {
    check_degree(t, n + 1);
    const BoundaryValues bv = boundary_values(t, n);
    KernelValues kv;
    kv.n = n;
    for (int k = 0; k <= n; ++k) {
        kv.k00 += bv.f0[k] * bv.f0[k] / t.norm_sq_r[k];
        kv.k11 += bv.f1[k] * bv.f1[k] / t.norm_sq_r[k];
    }
    return kv;
}

KernelValues kernel_at_zero_confluent(const FreudTable& t, int n) {
    check_degree(t, n + 1);
    const BoundaryValues bv = boundary_values(t, n + 1);
    const int m = n + 1;  // formulas are written for K_{m-1}
    const Real nrm = t.norm_sq_r[n];
    KernelValues kv;
    kv.n = n;
    kv.k00 = (bv.f1[m] * bv.f0[n] - bv.f1[n] * bv.f0[m]) / nrm;
    kv.k01 = (bv.f2[m] * bv.f0[n] - bv.f2[n] * bv.f0[m]) / (2 * nrm);
    kv.k11 = ((bv.f3[m] * bv.f0[n] - bv.f3[n] * bv.f0[m]) / 6 +
              (bv.f2[m] * bv.f1[n] - bv.f2[n] * bv.f1[m]) / 2) /
             nrm;
    return kv;
}

KernelZeroTable kernel_zero_table(const FreudTable& t, const BoundaryValues& bv) {
    KernelZeroTable kz;
    const int n_max = bv.n_max();
    kz.k00.assign(static_cast<std::size_t>(n_max) + 1, 0);
    kz.k11.assign(static_cast<std::size_t>(n_max) + 1, 0);
    Real s0 = 0, s1 = 0;
    for (int k = 0; k <= n_max; ++k) {
        s0 += bv.f0[k] * bv.f0[k] / t.norm_sq_r[k];
        s1 += bv.f1[k] * bv.f1[k] / t.norm_sq_r[k];
        kz.k00[k] = s0;
        kz.k11[k] = s1;
    }
    return kz;
}

KernelX0 kernel_x0(const FreudTable& t, int n, Real x, int max_deriv) {
    check_degree(t, n + 1);
    std::vector<Derivs> fx;
    eval_all(t, n, x, max_deriv, fx);
    const BoundaryValues bv = boundary_values(t, n);
    KernelX0 r;
    for (int k = 0; k <= n; ++k) {
        const Real c0 = bv.f0[k] / t.norm_sq_r[k];
        const Real c1 = bv.f1[k] / t.norm_sq_r[k];
        for (int j = 0; j <= max_deriv; ++j) {
            r.k[j] += c0 * fx[k][j];
            r.k01[j] += c1 * fx[k][j];
        }
    }
    return r;
}

KernelX0 kernel_x0_quotient(const FreudTable& t, int n, Real x) {
    check_degree(t, n + 1);
    if (x == 0) throw DomainError("quotient kernel form is singular at x = 0");
    const int m = n + 1;
    const BoundaryValues bv = boundary_values(t, m);
    const EvalChain c = eval_chain(t, m, x);
    const Real fm = c.value[0], fn = c.prev[0];
    const Real nrm = t.norm_sq_r[n];
    KernelX0 r;
    r.k[0] = (fm * bv.f0[n] - fn * bv.f0[m]) / (x * nrm);
    r.k01[0] = ((fm * bv.f0[n] - fn * bv.f0[m]) / (x * x) + (fm * bv.f1[n] - fn * bv.f1[m]) / x) / nrm;
    return r;
}

}  // namespace fsop
