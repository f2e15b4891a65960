#include "fsop/coeffs.hpp"

#include "fsop/quadrature.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

namespace fsop {

std::string to_string(Method m) {
    switch (m) {
        case Method::newton_system: return "newton_system";
        case Method::forward_hp: return "forward_hp";
        case Method::stieltjes: return "stieltjes";
    }
    return "unknown";
}

Method method_from_string(const std::string& s) {
    if (s == "newton_system") return Method::newton_system;
    if (s == "forward_hp") return Method::forward_hp;
    if (s == "stieltjes") return Method::stieltjes;
    throw ConfigError("unknown method tag '" + s + "'");
}

namespace {

HpReal hp_gamma(const HpReal& x) {
    HpReal r;
    mpfr_gamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

HpReal hp_from(Real v) {
    // Exact: every long double is representable at >= 64 bits of mantissa.
    return HpReal(v);
}

}  // namespace

GammaConstants gamma_constants(int precision_digits) {
    if (precision_digits < 16)
        throw ConfigError("precision_digits must be at least 16, got " +
                          std::to_string(precision_digits));
    PrecisionGuard guard(static_cast<unsigned>(precision_digits));
    GammaConstants c;
    c.precision_digits = precision_digits;
    c.gamma_quarter = hp_gamma(HpReal(1) / 4);
    c.gamma_three_quarter = hp_gamma(HpReal(3) / 4);
    c.a1_sq_exact = c.gamma_three_quarter / c.gamma_quarter;
    c.mu0 = c.gamma_quarter / 2;
    return c;
}

void FreudTable::finalize(const HpReal& mu0) {
    norm_sq.assign(a_sq.size(), HpReal(0));
    gamma.assign(a_sq.size(), HpReal(0));
    norm_sq[0] = mu0;
    for (std::size_t n = 1; n < a_sq.size(); ++n) norm_sq[n] = norm_sq[n - 1] * a_sq[n];
    for (std::size_t n = 0; n < a_sq.size(); ++n) gamma[n] = 1 / sqrt(norm_sq[n]);
    refresh_rounded();
}

void FreudTable::refresh_rounded() {
    auto round = [](const std::vector<HpReal>& src) {
        std::vector<Real> out(src.size());
        std::transform(src.begin(), src.end(), out.begin(), to_real);
        return out;
    };
    a_sq_r = round(a_sq);
    norm_sq_r = round(norm_sq);
    gamma_r = round(gamma);
}

double lew_quarles_estimate(int n) {
    if (n <= 0) throw DomainError("lew_quarles_estimate requires n >= 1");
    const double nn = n;
    return std::sqrt(nn / 12.0) * (1.0 + 1.0 / (24.0 * nn * nn));
}

namespace {

HpReal hp_lew_quarles(int n) {
    HpReal nn(n);
    return sqrt(nn / 12) * (1 + 1 / (24 * nn * nn));
}

// Residuals of the truncated string system for unknowns b[1..N], with b[0] = 0
// and b[N+1] = closure. Returns the scaled maximum max |R_n| / n.
HpReal string_system(const std::vector<HpReal>& b, const HpReal& closure,
                     std::vector<HpReal>& residual) {
    const int big_n = static_cast<int>(b.size()) - 1;
    HpReal worst(0);
    for (int n = 1; n <= big_n; ++n) {
        const HpReal& next = n < big_n ? b[n + 1] : closure;
        residual[n] = 4 * b[n] * (next + b[n] + b[n - 1]) - n;
        HpReal scaled = abs(residual[n]) / n;
        if (scaled > worst) worst = scaled;
    }
    return worst;
}

}  // namespace

FreudTable build_freud_table(int n_max, int precision_digits, const NewtonOptions& opts) {
    if (n_max < 2) throw ConfigError("n_max must be at least 2");
    const GammaConstants gc = gamma_constants(precision_digits);
    PrecisionGuard guard(static_cast<unsigned>(precision_digits));

    const int big_n = n_max + opts.buffer;
    const HpReal closure = hp_lew_quarles(big_n + 1);

    HpReal tol = opts.residual_tol > 0 ? HpReal(opts.residual_tol)
                                       : pow(HpReal(10), 8 - precision_digits);
    if (tol > HpReal(1e-14)) tol = HpReal(1e-14);

    std::vector<HpReal> b(big_n + 1, HpReal(0));
    for (int n = 1; n <= big_n; ++n) b[n] = hp_lew_quarles(n);

    std::vector<HpReal> res(big_n + 1), trial_res(big_n + 1);
    std::vector<HpReal> diag(big_n + 1), off(big_n + 1), c(big_n + 1), d(big_n + 1),
        step(big_n + 1), trial(big_n + 1);

    HpReal norm = string_system(b, closure, res);
    int iter = 0;
    for (; iter < opts.max_iterations && norm > tol; ++iter) {
        // Tridiagonal Jacobian: row n has 4 b_n off the diagonal on both sides.
        for (int n = 1; n <= big_n; ++n) {
            const HpReal& next = n < big_n ? b[n + 1] : closure;
            diag[n] = 4 * (next + 2 * b[n] + b[n - 1]);
            off[n] = 4 * b[n];
        }
        // Thomas algorithm; the system is strictly diagonally dominant.
        for (int n = 1; n <= big_n; ++n) {
            HpReal denom = diag[n];
            HpReal rhs = -res[n];
            if (n > 1) {
                denom -= off[n] * c[n - 1];
                rhs -= off[n] * d[n - 1];
            }
            c[n] = n < big_n ? off[n] / denom : HpReal(0);
            d[n] = rhs / denom;
        }
        step[big_n] = d[big_n];
        for (int n = big_n - 1; n >= 1; --n) step[n] = d[n] - c[n] * step[n + 1];

        HpReal lambda(1);
        bool accepted = false;
        for (int halving = 0; halving < 60; ++halving, lambda /= 2) {
            bool positive = true;
            trial[0] = 0;
            for (int n = 1; n <= big_n; ++n) {
                trial[n] = b[n] + lambda * step[n];
                if (trial[n] <= 0) positive = false;
            }
            if (!positive) continue;
            HpReal trial_norm = string_system(trial, closure, trial_res);
            if (trial_norm < norm) {
                std::swap(b, trial);
                std::swap(res, trial_res);
                norm = trial_norm;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }
    if (norm > tol)
        throw SolverFailure("string-equation Newton did not converge", norm.convert_to<double>());

    FreudTable t;
    t.n_max = n_max;
    t.precision_digits = precision_digits;
    t.method = Method::newton_system;
    t.a_sq.assign(b.begin(), b.begin() + n_max + 1);
    t.finalize(gc.mu0);

    if (abs(t.a_sq[1] - gc.a1_sq_exact) > HpReal(1e-10))
        throw SolverFailure("Newton converged to a non-physical branch (a_1^2 certificate)",
                            abs(t.a_sq[1] - gc.a1_sq_exact).convert_to<double>());
    return t;
}

FreudTable build_forward_table(int n_max, int precision_digits) {
    if (n_max < 2) throw ConfigError("n_max must be at least 2");
    const int work_digits = std::max(precision_digits, 8 * n_max);
    const GammaConstants exact = gamma_constants(work_digits);

    std::vector<HpReal> a;
    {
        PrecisionGuard guard(static_cast<unsigned>(work_digits));
        a.assign(n_max + 1, HpReal(0));
        a[1] = exact.a1_sq_exact;
        for (int n = 1; n < n_max; ++n) a[n + 1] = HpReal(n) / (4 * a[n]) - a[n] - a[n - 1];
    }

    PrecisionGuard guard(static_cast<unsigned>(precision_digits));
    FreudTable t;
    t.n_max = n_max;
    t.precision_digits = precision_digits;
    t.method = Method::forward_hp;
    t.a_sq.reserve(a.size());
    for (auto& v : a) {
        HpReal r(v);
        r.precision(static_cast<unsigned>(precision_digits));
        t.a_sq.push_back(r);
    }
    HpReal mu0(exact.mu0);
    mu0.precision(static_cast<unsigned>(precision_digits));
    t.finalize(mu0);
    return t;
}

namespace {

// Discretized Stieltjes procedure in orthonormal (Lanczos) form on a symmetric
// measure. Returns beta_0 = total mass followed by beta_1..beta_{n_max}.
std::vector<Real> stieltjes_betas(const DiscreteMeasure& m, int n_max) {
    const std::size_t size = m.size();
    std::vector<Real> prev(size, 0), cur(size), next(size);
    Real mass = 0;
    for (Real w : m.weights) mass += w;
    const Real inv_sqrt_mass = 1 / std::sqrt(mass);
    for (std::size_t i = 0; i < size; ++i) cur[i] = inv_sqrt_mass;

    std::vector<Real> beta(n_max + 1, 0);
    beta[0] = mass;
    Real sqrt_beta_prev = 0;
    for (int k = 0; k < n_max; ++k) {
        Real alpha = 0;
        for (std::size_t i = 0; i < size; ++i) alpha += m.weights[i] * m.nodes[i] * cur[i] * cur[i];
        Real nrm = 0;
        for (std::size_t i = 0; i < size; ++i) {
            next[i] = (m.nodes[i] - alpha) * cur[i] - sqrt_beta_prev * prev[i];
            nrm += m.weights[i] * next[i] * next[i];
        }
        beta[k + 1] = nrm;
        const Real s = std::sqrt(nrm);
        for (std::size_t i = 0; i < size; ++i) next[i] /= s;
        std::swap(prev, cur);
        std::swap(cur, next);
        sqrt_beta_prev = s;
    }
    return beta;
}

}  // namespace

FreudTable stieltjes_oracle(int n_max, int quadrature_points, const StieltjesOptions& opts) {
    if (n_max < 1 || n_max > 60) throw ConfigError("stieltjes_oracle supports 1 <= n_max <= 60");
    if (quadrature_points < 40) throw ConfigError("stieltjes_oracle needs at least 40 points");

    const Real half_width = freud_truncation(n_max + 1);
    const auto coarse = stieltjes_betas(freud_measure(quadrature_points, half_width), n_max);
    const auto fine = stieltjes_betas(freud_measure(2 * quadrature_points, half_width), n_max);
    for (int n = 0; n <= n_max; ++n) {
        const Real scale = std::max<Real>(1, std::fabs(fine[n]));
        if (std::fabs(coarse[n] - fine[n]) > opts.agreement_tol * scale)
            throw OracleError("quadrature under-resolved at n = " + std::to_string(n) +
                              ": doubling the points moved a_n^2 by " +
                              std::to_string(static_cast<double>(std::fabs(coarse[n] - fine[n]))));
    }

    constexpr int kDigits = 20;
    PrecisionGuard guard(kDigits);
    FreudTable t;
    t.n_max = n_max;
    t.precision_digits = kDigits;
    t.method = Method::stieltjes;
    t.a_sq.assign(n_max + 1, HpReal(0));
    for (int n = 1; n <= n_max; ++n) t.a_sq[n] = hp_from(fine[n]);
    t.finalize(hp_from(fine[0]));
    return t;
}

HpReal string_residual(const FreudTable& t, int n) {
    if (n < 1 || n >= t.n_max) throw TableExhausted(n + 1, t.n_max);
    return abs(4 * t.a_sq[n] * (t.a_sq[n + 1] + t.a_sq[n] + t.a_sq[n - 1]) - n);
}

}  // namespace fsop
