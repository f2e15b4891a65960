#include "fsop/sobolev.hpp"

#include "fsop/quadrature.hpp"

#include <cmath>

namespace fsop {

namespace {

// K_{n}(0,0) with K_{-1} = 0.
Real k00(const SobolevTable& st, int n) { return n < 0 ? 0 : st.kz.k00[n]; }
Real k11(const SobolevTable& st, int n) { return n < 0 ? 0 : st.kz.k11[n]; }

void check_index(const SobolevTable& st, int n) {
    if (n < 0) throw DomainError("negative degree");
    if (n > st.n_max) throw TableExhausted(n, st.n_max);
}

}  // namespace

SobolevTable build_sobolev_table(const FreudTable& ft, const SobolevParams& params, int n_max) {
    if (params.M0 < 0 || params.M1 < 0) throw ConfigError("masses must be nonnegative");
    if (n_max < 0) throw ConfigError("n_max must be nonnegative");
    if (n_max > ft.n_max - 2) throw TableExhausted(n_max + 2, ft.n_max);

    const Real M0 = params.M0, M1 = params.M1;
    SobolevTable st;
    st.params = params;
    st.n_max = n_max;
    st.bv = boundary_values(ft, n_max + 1);
    st.kz = kernel_zero_table(ft, st.bv);

    const auto size = static_cast<std::size_t>(n_max) + 1;
    for (auto* v : {&st.q0, &st.q1, &st.kappa0, &st.kappa1, &st.a10, &st.b11, &st.norm_ratio,
                    &st.qnorm_sq, &st.zeta, &st.lambda_nn, &st.lambda_nm2, &st.rho_odd})
        v->assign(size, 0);
    st.r.assign(size, 0);

    const auto& a = ft.a_sq_r;
    const auto& nf = ft.norm_sq_r;
    for (int n = 0; n <= n_max; ++n) {
        const bool odd = n % 2 == 1;
        st.r[n] = odd ? 1 : 0;
        if (odd) {
            st.rho_odd[n] = 1 + M1 * k11(st, n - 2);
            st.q1[n] = st.bv.f1[n] / st.rho_odd[n];
            st.kappa1[n] = (1 + M1 * k11(st, n)) / (1 + M1 * k11(st, n - 1)) - 1;
        } else {
            st.q0[n] = st.bv.f0[n] / (1 + M0 * k00(st, n - 1));
            st.kappa0[n] = (1 + M0 * k00(st, n)) / (1 + M0 * k00(st, n - 1)) - 1;
        }
        st.norm_ratio[n] = 1 / (1 + st.kappa0[n] + st.kappa1[n]);
        st.qnorm_sq[n] = nf[n] / st.norm_ratio[n];
        st.zeta[n] = 1 / std::sqrt(st.qnorm_sq[n]);

        if (n >= 1) {
            if (odd) {
                st.a10[n] = -M1 * st.q1[n] * st.bv.f0[n - 1] / nf[n - 1];
                st.b11[n] = M1 * st.q1[n] * st.bv.f1[n] / nf[n - 1];
            } else {
                st.b11[n] = M0 * st.q0[n] * st.bv.f0[n] / nf[n - 1];
            }
        }
    }
    for (int n = 0; n <= n_max; ++n) {
        const Real shift = st.a10[n] + st.b11[n];
        st.lambda_nn[n] = (a[n + 1] + a[n] + shift) * st.norm_ratio[n] + shift;
        if (n >= 2) st.lambda_nm2[n] = a[n - 1] * (a[n] + st.b11[n]) * st.norm_ratio[n - 2];
    }
    return st;
}

ConnectionCoeffs connection_coeffs(const SobolevTable& st, int n) {
    check_index(st, n);
    if (n < 1) throw DomainError("connection coefficients need n >= 1");
    return {st.a10[n], st.b11[n], st.kappa0[n], st.kappa1[n], st.r[n]};
}

Derivs eval_Q(const SobolevTable& st, const FreudTable& ft, int n, Real x, int max_deriv) {
    check_index(st, n);
    std::vector<Derivs> fx;
    eval_all(ft, n, x, max_deriv, fx);
    Derivs q = fx[n];
    if (n == 0) return q;
    const Real c0 = st.params.M0 * st.q0[n];
    const Real c1 = st.params.M1 * st.q1[n];
    if (c0 == 0 && c1 == 0) return q;
    for (int k = 0; k < n; ++k) {
        // Only one of f0, f1 is nonzero for each k.
        const Real w = (c0 * st.bv.f0[k] + c1 * st.bv.f1[k]) / ft.norm_sq_r[k];
        if (w == 0) continue;
        for (int j = 0; j <= max_deriv; ++j) q[j] -= w * fx[k][j];
    }
    return q;
}

Real eval_Q_quotient(const SobolevTable& st, const FreudTable& ft, int n, Real x) {
    check_index(st, n);
    if (x == 0) throw DomainError("quotient form is singular at x = 0");
    if (n == 0) return 1;
    const EvalChain c = eval_chain(ft, n, x);
    return (1 + st.a10[n] / (x * x)) * c.value[0] + st.b11[n] / x * c.prev[0];
}

std::vector<Real> eval_Q_five_term(const SobolevTable& st, int n, Real x) {
    check_index(st, n);
    std::vector<Real> q(static_cast<std::size_t>(n) + 1, 0);
    q[0] = 1;
    if (n >= 1) q[1] = x;
    const Real x2 = x * x;
    for (int k = 0; k + 2 <= n; ++k) {
        q[k + 2] = (x2 - st.lambda_nn[k]) * q[k];
        if (k >= 2) q[k + 2] -= st.lambda_nm2[k] * q[k - 2];
    }
    return q;
}

FiveTerm five_term(const SobolevTable& st, int n) {
    check_index(st, n);
    return {st.lambda_nn[n], st.lambda_nm2[n]};
}

Derivs eval_limit_poly(const FreudTable& ft, int n, Real x, int max_deriv) {
    if (n < 2) throw DomainError("limit polynomials need degree >= 2");
    if (n % 2 == 0) {
        // G_n = F_n - F_n(0) / K_{n-2}(0,0) * K_{n-2}(x,0)
        const KernelValues kv = kernel_at_zero(ft, n - 2);
        const BoundaryValues bv = boundary_values(ft, n);
        const KernelX0 kx = kernel_x0(ft, n - 2, x, max_deriv);
        Derivs g = eval_chain(ft, n, x, max_deriv).value;
        const Real c = bv.f0[n] / kv.k00;
        for (int j = 0; j <= max_deriv; ++j) g[j] -= c * kx.k[j];
        return g;
    }
    if (n < 3) throw DomainError("J_n needs odd degree >= 3");
    const KernelValues kv = kernel_at_zero(ft, n - 2);
    const BoundaryValues bv = boundary_values(ft, n);
    const KernelX0 kx = kernel_x0(ft, n - 2, x, max_deriv);
    Derivs g = eval_chain(ft, n, x, max_deriv).value;
    const Real c = bv.f1[n] / kv.k11;
    for (int j = 0; j <= max_deriv; ++j) g[j] -= c * kx.k01[j];
    return g;
}

namespace {

Derivs eval_spec(const FreudTable& ft, const SobolevTable& st, const PolySpec& s, Real x) {
    if (s.family == PolySpec::Family::freud) return eval_chain(ft, s.k, x, 1).value;
    return eval_Q(st, ft, s.k, x, 1);
}

struct InnerSum {
    Real value = 0;
    Real magnitude = 0;
};

InnerSum integrate_pair(const FreudTable& ft, const SobolevTable& st, const PolySpec& p,
                        const PolySpec& q, const DiscreteMeasure& m) {
    InnerSum s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const Real term = m.weights[i] * eval_spec(ft, st, p, m.nodes[i])[0] *
                          eval_spec(ft, st, q, m.nodes[i])[0];
        s.value += term;
        s.magnitude += std::fabs(term);
    }
    return s;
}

}  // namespace

Real sobolev_inner_oracle(const FreudTable& ft, const SobolevTable& st, const PolySpec& p,
                          const PolySpec& q, const InnerOracleOptions& opts) {
    for (const PolySpec* s : {&p, &q}) {
        if (s->k < 0 || s->k > kInnerOracleCap)
            throw DomainError("inner-product oracle supports degrees 0.." +
                              std::to_string(kInnerOracleCap));
        if (s->k > st.n_max) throw TableExhausted(s->k, st.n_max);
    }
    const Real half_width = freud_truncation(std::max(p.k, q.k) + 1);
    const InnerSum coarse = integrate_pair(ft, st, p, q, freud_measure(opts.points, half_width));
    const InnerSum fine = integrate_pair(ft, st, p, q, freud_measure(2 * opts.points, half_width));
    if (std::fabs(coarse.value - fine.value) > opts.agreement_tol * std::max<Real>(fine.magnitude, 1))
        throw OracleError("inner-product quadrature disagrees on refinement");

    const Derivs p0 = eval_spec(ft, st, p, 0), q0 = eval_spec(ft, st, q, 0);
    return fine.value + st.params.M0 * p0[0] * q0[0] + st.params.M1 * p0[1] * q0[1];
}

Real sobolev_inner_oracle(const FreudTable& ft, const SobolevParams& params, const PolySpec& p,
                          const PolySpec& q, const InnerOracleOptions& opts) {
    const int need = std::max(p.k, q.k);
    const SobolevTable st = build_sobolev_table(ft, params, std::min(need, ft.n_max - 2));
    return sobolev_inner_oracle(ft, st, p, q, opts);
}

}  // namespace fsop
