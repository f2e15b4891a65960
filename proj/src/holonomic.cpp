#include "fsop/holonomic.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

namespace fsop {

Biquartic biquartic(const SobolevTable& st, const FreudTable& ft, int n_odd) {
    if (n_odd < 1 || n_odd % 2 != 1) throw DomainError("biquartic needs an odd degree");
    if (n_odd > st.n_max) throw TableExhausted(n_odd, st.n_max);
    const auto& a = ft.a_sq_r;
    const int m = n_odd;
    const Real k = st.kappa1[m];
    const Real p = a[m + 1] + a[m];
    const Real pm = a[m] + a[m - 1];
    const Real am = a[m];
    Biquartic u;
    u.n_odd = m;
    u.u4 = 16 * p * p * (1 + k);
    u.u2 = 4 * p * (4 * p * p + k * (2 + k) * (4 * am * p - 1));
    u.u0 = k * (-12 * p * p + k * (1 + 8 * am * p * (-1 + 2 * pm * p)));
    return u;
}

RationalFn closed_form_R(const Biquartic& u) {
    const Polynomial up = u.poly();
    const Polynomial x{0, 1};
    // (2u - 4x^4 u - x u') / (x u)
    const Polynomial num = 2 * up - Polynomial::monomial(4, 4) * up - x * up.derivative();
    return RationalFn(num, x * up);
}

namespace {

struct Pieces {
    RationalFn A, B, a, b, gamma, C1, D1;
};

Pieces pieces(const SobolevTable& st, const FreudTable& ft, int m) {
    const auto& as = ft.a_sq_r;
    const RationalFn x = RationalFn::x();
    auto A_of = [&](int j) {
        const Real c = st.r[j] * st.kappa1[j] / (4 * (as[j + 1] + as[j]));
        return RationalFn(Polynomial{-c, 0, 1}, Polynomial{0, 0, 1});
    };
    auto B_of = [&](int j) {
        return RationalFn(Polynomial{as[j] * (st.kappa0[j] + st.kappa1[j])}, Polynomial{0, 1});
    };
    auto a_of = [&](int j) { return RationalFn(Polynomial{0, -4 * as[j]}); };
    auto b_of = [&](int j) {
        return RationalFn(Polynomial{4 * as[j] * (as[j + 1] + as[j]), 0, 4 * as[j]});
    };
    auto gamma_of = [&](int j) { return RationalFn::constant(-as[j]); };

    Pieces p;
    p.A = A_of(m);
    p.B = B_of(m);
    p.a = a_of(m);
    p.b = b_of(m);
    p.gamma = gamma_of(m);
    if (m == 1) {
        // F_0' = 0, so the F_{n-1}' term drops out.
        p.C1 = p.A.derivative() + p.A * p.a;
        p.D1 = p.B.derivative() + p.A * p.b;
    } else {
        const RationalFn bprev = b_of(m - 1);
        const RationalFn gprev = gamma_of(m - 1);
        p.C1 = p.A.derivative() + p.A * p.a + p.B * bprev / gprev;
        p.D1 = p.B.derivative() + p.A * p.b + p.B * (a_of(m - 1) - bprev * x / gprev);
    }
    return p;
}

bool identically_zero(const RationalFn& f) { return f.num().is_zero(); }

}  // namespace

LadderSystem ladder_system(const SobolevTable& st, const FreudTable& ft, int n) {
    if (n < 2) throw DomainError("ladder_system needs n >= 2");
    if (n > st.n_max) throw TableExhausted(n, st.n_max);

    const Pieces cur = pieces(st, ft, n);
    const Pieces prev = pieces(st, ft, n - 1);
    const RationalFn x = RationalFn::x();

    LadderSystem ls;
    ls.n = n;
    ls.params = st.params;
    ls.A = cur.A;
    ls.B = cur.B;
    ls.a = cur.a;
    ls.b = cur.b;
    ls.beta = x;
    ls.gamma = cur.gamma;
    ls.C1 = cur.C1;
    ls.D1 = cur.D1;

    const RationalFn& g = prev.gamma;  // gamma_{n-1}
    ls.A2 = prev.B / g;
    ls.B2 = prev.A - prev.B * x / g;
    ls.C2 = prev.D1 / g;
    ls.D2 = prev.C1 - prev.D1 * x / g;

    ls.Lambda = ls.A * ls.B2 - ls.A2 * ls.B;
    if (identically_zero(ls.Lambda)) throw DegenerateSystem("ladder determinant vanishes identically");

    ls.Xi1 = (ls.C1 * ls.B - ls.D1 * ls.A) / ls.Lambda;
    ls.Xi2 = (ls.C1 * ls.B2 - ls.D1 * ls.A2) / ls.Lambda;
    ls.Theta1 = (ls.C2 * ls.B - ls.D2 * ls.A) / ls.Lambda;
    ls.Theta2 = (ls.C2 * ls.B2 - ls.D2 * ls.A2) / ls.Lambda;
    if (n % 2 == 1) ls.u = biquartic(st, ft, n);
    return ls;
}

OdeCoeffs ode_coeffs(const LadderSystem& ls) {
    if (identically_zero(ls.Xi1)) throw DegenerateSystem("lowering coefficient vanishes identically");
    const RationalFn log_d = ls.Xi1.derivative() / ls.Xi1;
    OdeCoeffs ode;
    ode.n = ls.n;
    ode.R = ls.Theta1 - ls.Xi2 - log_d;
    ode.S = ls.Xi2 * (log_d - ls.Theta1) - ls.Xi2.derivative() + ls.Theta2 * ls.Xi1;
    ode.u = ls.u;
    if (ls.u) {
        const URoots r = u_roots(*ls.u);
        ode.z_plus = r.z_plus;
        ode.z_minus = r.z_minus;
    }
    return ode;
}

IdentityResidual lowering_residual(const LadderSystem& ls, const SobolevTable& st, const FreudTable& ft,
                                   Real x) {
    const Derivs q = eval_Q(st, ft, ls.n, x, 1);
    const Real qm = eval_Q(st, ft, ls.n - 1, x, 0)[0];
    const Real t1 = ls.Xi2(x) * q[0], t2 = q[1], t3 = ls.Xi1(x) * qm;
    return {std::fabs(t1 - t2 - t3), std::max({std::fabs(t1), std::fabs(t2), std::fabs(t3)})};
}

IdentityResidual raising_residual(const LadderSystem& ls, const SobolevTable& st, const FreudTable& ft,
                                  Real x) {
    const Derivs q = eval_Q(st, ft, ls.n, x, 0);
    const Derivs qm = eval_Q(st, ft, ls.n - 1, x, 1);
    const Real t1 = ls.Theta1(x) * qm[0], t2 = qm[1], t3 = ls.Theta2(x) * q[0];
    return {std::fabs(t1 + t2 - t3), std::max({std::fabs(t1), std::fabs(t2), std::fabs(t3)})};
}

IdentityResidual ode_residual(const OdeCoeffs& ode, const SobolevTable& st, const FreudTable& ft, Real x) {
    const Derivs q = eval_Q(st, ft, ode.n, x, 2);
    const Real t1 = q[2], t2 = ode.R(x) * q[1], t3 = ode.S(x) * q[0];
    return {std::fabs(t1 + t2 + t3), std::max({std::fabs(t1), std::fabs(t2), std::fabs(t3)})};
}

std::vector<Real> ode_poles(const OdeCoeffs& ode) {
    // Repeated real poles split into tight complex clusters, so keep anything close to the axis.
    const Real cluster_tol = 1e-2L;
    std::vector<Real> poles = real_roots(ode.R.den(), cluster_tol);
    const std::vector<Real> more = real_roots(ode.S.den(), cluster_tol);
    poles.insert(poles.end(), more.begin(), more.end());
    std::sort(poles.begin(), poles.end());
    return poles;
}

std::vector<Real> pole_avoiding_samples(const std::vector<Real>& poles, int count, Real lo, Real hi,
                                        Real min_distance) {
    if (count <= 0 || !(hi > lo)) throw DomainError("pole_avoiding_samples: bad range");
    auto clear = [&](Real x) {
        return std::all_of(poles.begin(), poles.end(),
                           [&](Real p) { return std::fabs(x - p) >= min_distance; });
    };
    std::vector<Real> out;
    // Golden-ratio stepping covers the interval evenly and never repeats.
    const Real step = (std::sqrt(Real(5)) - 1) / 2;
    Real t = Real(0.5);
    for (int tries = 0; static_cast<int>(out.size()) < count && tries < 100000; ++tries) {
        const Real x = lo + (hi - lo) * t;
        if (clear(x)) out.push_back(x);
        t += step;
        t -= std::floor(t);
    }
    if (static_cast<int>(out.size()) < count) throw NumericError("could not place pole-free samples");
    std::sort(out.begin(), out.end());
    return out;
}

URoots u_roots(Real u4, Real u2, Real u0) {
    if (u4 == 0) throw DomainError("u_roots: leading coefficient is zero");
    const Real disc = u2 * u2 - 4 * u4 * u0;
    if (disc < 0) throw UnexpectedRegime("biquartic has complex z-roots (negative discriminant)");
    const Real sq = std::sqrt(disc);
    const Real q = -(u2 + (u2 >= 0 ? sq : -sq)) / 2;
    Real z1, z2;
    if (q == 0) {
        z1 = z2 = 0;
    } else {
        z1 = q / u4;
        z2 = u0 / q;
    }
    URoots r;
    r.z_plus = std::max(z1, z2);
    r.z_minus = std::min(z1, z2);
    r.scale = std::max({std::fabs(u4), std::fabs(u2), std::fabs(u0)});
    if (r.z_plus < 0 || r.z_minus > 0)
        throw UnexpectedRegime("biquartic z-roots do not straddle the origin");
    r.real_root = std::sqrt(r.z_plus);
    r.imag_root = std::sqrt(-r.z_minus);
    const Polynomial u{u0, 0, u2, 0, u4};
    r.residual_real = std::fabs(u(r.real_root));
    r.residual_imag = std::abs(u(std::complex<Real>(0, r.imag_root)));
    r.real_zeros.label = ZeroLabel::biquartic_u;
    r.real_zeros.zeros = {-r.real_root, r.real_root};
    r.real_zeros.residuals = {r.residual_real, r.residual_real};
    r.real_zeros.scale = r.scale;
    return r;
}

URoots u_roots(const Biquartic& u) {
    URoots r = u_roots(u.u4, u.u2, u.u0);
    r.n_odd = u.n_odd;
    r.real_zeros.n = u.n_odd;
    return r;
}

ZAsymptotics z_asymptotics(int n) {
    if (n < 1) throw DomainError("z_asymptotics needs n >= 1");
    const Real nn = n;
    const Real s32 = std::sqrt(Real(1.5));
    const Real s23 = std::sqrt(Real(2) / 3);
    ZAsymptotics z;
    z.z_plus = Real(27) / 64 * s32 * std::pow(nn, Real(-1.5)) - Real(243) / 512 * s32 * std::pow(nn, Real(-2.5));
    z.z_minus = -s23 * std::pow(nn, Real(-0.5)) - s32 / 4 * std::pow(nn, Real(-2.5));
    return z;
}

Real ElectrostaticResult::max_relative() const {
    Real m = 0;
    for (std::size_t i = 0; i < residuals.size(); ++i)
        m = std::max(m, scales[i] > 0 ? residuals[i] / scales[i] : residuals[i]);
    return m;
}

ElectrostaticResult electrostatic_residual(const SobolevTable& st, const FreudTable& ft, int n_odd,
                                           const RootSearch& opts) {
    const Biquartic u = biquartic(st, ft, n_odd);
    const Polynomial up = u.poly();
    const Polynomial upd = up.derivative();
    const ZeroSet zs = q_zeros(st, ft, n_odd, opts);

    ElectrostaticResult res;
    res.n_odd = n_odd;
    for (std::size_t k = 0; k < zs.zeros.size(); ++k) {
        const Real y = zs.zeros[k];
        if (y == 0) continue;
        Real repulsion = 0;
        for (std::size_t j = 0; j < zs.zeros.size(); ++j)
            if (j != k) repulsion += 1 / (zs.zeros[j] - y);
        const Real field = upd(y) / (2 * up(y));
        const Real terms[] = {repulsion, field, -1 / y, 2 * y * y * y};
        Real sum = 0, scale = 0;
        for (Real t : terms) {
            sum += t;
            scale = std::max(scale, std::fabs(t));
        }
        res.zeros.push_back(y);
        res.residuals.push_back(std::fabs(sum));
        res.scales.push_back(scale);
    }
    return res;
}

Real external_potential(const Biquartic& u, Real x) {
    if (x == 0) throw DomainError("external potential is singular at the origin");
    const Real x2 = x * x;
    return std::log(std::fabs(u.poly()(x))) / 2 - std::log(x2) / 2 + x2 * x2 / 2;
}

void write_u_roots_csv(std::ostream& os, const std::vector<std::pair<Real, URoots>>& rows,
                       bool full_precision) {
    const auto old_flags = os.flags();
    const auto old_prec = os.precision();
    os << "M1,n,re_root,im_root\n";
    for (const auto& [m1, r] : rows) {
        os << std::defaultfloat << std::setprecision(full_precision ? 21 : 6) << static_cast<double>(m1)
           << ',' << r.n_odd << ',';
        if (full_precision)
            os << std::scientific << std::setprecision(21);
        else
            os << std::fixed << std::setprecision(6);
        os << r.real_root << ',' << r.imag_root << '\n';
    }
    os.flags(old_flags);
    os.precision(old_prec);
}

}  // namespace fsop
