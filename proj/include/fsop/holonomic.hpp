#pragma once

#include "fsop/polynomial.hpp"
#include "fsop/zeros.hpp"

#include <iosfwd>
#include <optional>

namespace fsop {

/// Coefficients of u(x) = u4 x^4 + u2 x^2 + u0 for an odd degree.
struct Biquartic {
    int n_odd = 0;
    Real u4 = 0, u2 = 0, u0 = 0;
    Polynomial poly() const { return Polynomial{u0, 0, u2, 0, u4}; }
};

Biquartic biquartic(const SobolevTable& st, const FreudTable& ft, int n_odd);

// 2/x - 4x^3 - u'/u.
RationalFn closed_form_R(const Biquartic& u);

/// Ladder operator data for Q_n, Q_{n-1}. Q_n = A F_n + B F_{n-1};
/// F_n' = a F_n + b F_{n-1}; F_{n-2} = (F_n - beta F_{n-1}) / gamma.
struct LadderSystem {
    int n = 0;
    SobolevParams params;
    RationalFn A, B, a, b, beta, gamma;
    RationalFn C1, D1;  // Q_n'     = C1 F_n + D1 F_{n-1}
    RationalFn A2, B2;  // Q_{n-1}  = A2 F_n + B2 F_{n-1}
    RationalFn C2, D2;  // Q_{n-1}' = C2 F_n + D2 F_{n-1}
    RationalFn Lambda;
    RationalFn Xi1, Xi2, Theta1, Theta2;
    std::optional<Biquartic> u;  // odd n only
};

LadderSystem ladder_system(const SobolevTable& st, const FreudTable& ft, int n);

/// Q_n'' + R Q_n' + S Q_n = 0.
struct OdeCoeffs {
    int n = 0;
    RationalFn R, S;
    std::optional<Biquartic> u;
    Real z_plus = 0, z_minus = 0;  // odd n only
};

OdeCoeffs ode_coeffs(const LadderSystem& ls);

struct IdentityResidual {
    Real residual = 0;
    Real scale = 0;  // largest term magnitude
    Real relative() const { return scale > 0 ? residual / scale : residual; }
};

IdentityResidual lowering_residual(const LadderSystem& ls, const SobolevTable& st, const FreudTable& ft, Real x);
IdentityResidual raising_residual(const LadderSystem& ls, const SobolevTable& st, const FreudTable& ft, Real x);
IdentityResidual ode_residual(const OdeCoeffs& ode, const SobolevTable& st, const FreudTable& ft, Real x);

// Real poles of R and S (roots of their denominators).
std::vector<Real> ode_poles(const OdeCoeffs& ode);

// `count` points in [lo, hi] at distance >= min_distance from every pole.
std::vector<Real> pole_avoiding_samples(const std::vector<Real>& poles, int count, Real lo, Real hi,
                                        Real min_distance = 1e-2L);

/// Roots of u via z = x^2: u4 z^2 + u2 z + u0 = 0.
struct URoots {
    int n_odd = 0;
    Real z_plus = 0, z_minus = 0;
    Real real_root = 0;       // sqrt(z_plus)
    Real imag_root = 0;       // sqrt(-z_minus), the roots are +- i imag_root
    Real residual_real = 0;   // |u(real_root)|
    Real residual_imag = 0;   // |u(i imag_root)|
    Real scale = 0;           // max |u_k|
    ZeroSet real_zeros;       // label biquartic_u, +- real_root
};

URoots u_roots(Real u4, Real u2, Real u0);
URoots u_roots(const Biquartic& u);

struct ZAsymptotics {
    Real z_plus = 0;
    Real z_minus = 0;
};

// Two-term large-n expansions of z+ and z- for degree 2n+1.
ZAsymptotics z_asymptotics(int n);

struct ElectrostaticResult {
    int n_odd = 0;
    std::vector<Real> zeros;      // nonzero zeros of Q_{n_odd}
    std::vector<Real> residuals;  // equilibrium residual at each
    std::vector<Real> scales;     // largest term at each
    Real max_relative() const;
};

ElectrostaticResult electrostatic_residual(const SobolevTable& st, const FreudTable& ft, int n_odd,
                                           const RootSearch& opts = {});

// 1/2 ln|u(x)| - 1/2 ln(x^2 exp(-x^4)).
Real external_potential(const Biquartic& u, Real x);

void write_u_roots_csv(std::ostream& os, const std::vector<std::pair<Real, URoots>>& rows,
                       bool full_precision = false);

}  // namespace fsop
