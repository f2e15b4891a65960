#pragma once

#include "fsop/freud.hpp"

namespace fsop {

/// Masses of <p,q>_1 = <p,q> + M0 p(0) q(0) + M1 p'(0) q'(0).
struct SobolevParams {
    Real M0 = 0;
    Real M1 = 0;
};

/// Per-degree data of the monic Sobolev family Q_n for fixed masses.
/// All arrays are indexed by degree 0..n_max.
struct SobolevTable {
    SobolevParams params;
    int n_max = 0;
    std::vector<Real> q0, q1;          // Q_n(0), Q_n'(0)
    std::vector<Real> kappa0, kappa1;  // ratios of consecutive (1 + M K) minus one
    std::vector<int> r;                // n mod 2
    std::vector<Real> a10, b11;        // connection coefficients
    std::vector<Real> norm_ratio;      // ||F_n||^2 / ||Q_n||_1^2
    std::vector<Real> qnorm_sq;        // ||Q_n||_1^2
    std::vector<Real> zeta;            // ||Q_n||_1^{-1}
    std::vector<Real> lambda_nn, lambda_nm2;
    std::vector<Real> rho_odd;         // 1 + M1 K^{(1,1)}_{m-2}(0,0) for odd m, 0 for even m

    // Cached Freud data at the origin, shared by every evaluation.
    BoundaryValues bv;
    KernelZeroTable kz;
};

SobolevTable build_sobolev_table(const FreudTable& ft, const SobolevParams& params, int n_max);

struct ConnectionCoeffs {
    Real a10 = 0;
    Real b11 = 0;
    Real kappa0 = 0;
    Real kappa1 = 0;
    int r = 0;
};

ConnectionCoeffs connection_coeffs(const SobolevTable& st, int n);

// Q_n^{(j)}(x), j <= max_deriv <= 3, from the kernel representation (regular at 0).
Derivs eval_Q(const SobolevTable& st, const FreudTable& ft, int n, Real x, int max_deriv = 0);

// Q_n(x) = (1 + A10/x^2) F_n(x) + (B11/x) F_{n-1}(x); x != 0.
Real eval_Q_quotient(const SobolevTable& st, const FreudTable& ft, int n, Real x);

// Q_0(x)..Q_n(x) from the five-term recurrence.
std::vector<Real> eval_Q_five_term(const SobolevTable& st, int n, Real x);

struct FiveTerm {
    Real lambda_nn = 0;
    Real lambda_nm2 = 0;  // 0 for n < 2
};

FiveTerm five_term(const SobolevTable& st, int n);

// G_n for even n >= 2, J_n for odd n >= 3, with derivatives up to max_deriv.
Derivs eval_limit_poly(const FreudTable& ft, int n, Real x, int max_deriv = 0);

/// Member of {F_k, Q_k} for the inner-product oracle.
struct PolySpec {
    enum class Family { freud, sobolev };
    Family family = Family::sobolev;
    int k = 0;
};

constexpr int kInnerOracleCap = 14;

struct InnerOracleOptions {
    int points = 800;                // refined against 2 * points
    Real agreement_tol = 1e-12L;     // relative to sum |w p q|
};

// Quadrature of <p,q> plus the mass terms.
Real sobolev_inner_oracle(const FreudTable& ft, const SobolevTable& st, const PolySpec& p,
                          const PolySpec& q, const InnerOracleOptions& opts = {});
Real sobolev_inner_oracle(const FreudTable& ft, const SobolevParams& params, const PolySpec& p,
                          const PolySpec& q, const InnerOracleOptions& opts = {});

}  // namespace fsop
