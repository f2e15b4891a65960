#pragma once

#include "fsop/types.hpp"

#include <string>
#include <vector>

namespace fsop {

enum class Method { newton_system, forward_hp, stieltjes };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

struct GammaConstants {
    HpReal gamma_quarter;        // Gamma(1/4)
    HpReal gamma_three_quarter;  // Gamma(3/4)
    HpReal a1_sq_exact;          // Gamma(3/4) / Gamma(1/4)
    HpReal mu0;                  // integral of exp(-x^4) over the real line
    int precision_digits = 0;
};

GammaConstants gamma_constants(int precision_digits);

/// Recurrence data of the monic Freud polynomials for the weight exp(-x^4).
///
/// a_sq[n] is the coefficient in x F_n = F_{n+1} + a_sq[n] F_{n-1}; norm_sq[n]
/// is the squared L2 norm of F_n and gamma[n] the leading coefficient of the
/// orthonormal polynomial. The high-precision arrays are the source of truth;
/// the `*_r` arrays are the same values rounded to `Real` for evaluation.
struct FreudTable {
    int n_max = 0;
    int precision_digits = 0;
    Method method = Method::newton_system;

    std::vector<HpReal> a_sq;
    std::vector<HpReal> norm_sq;
    std::vector<HpReal> gamma;

    std::vector<Real> a_sq_r;
    std::vector<Real> norm_sq_r;
    std::vector<Real> gamma_r;

    // Fills norm_sq and gamma from a_sq and mu0, then the rounded views.
    void finalize(const HpReal& mu0);
    void refresh_rounded();
};

struct NewtonOptions {
    int buffer = 50;
    int max_iterations = 200;
    // Scaled residual max_n |string_n| / n at which iteration stops. Zero means
    // "as tight as the working precision allows" (10^(8 - digits), and never
    // looser than 1e-14).
    double residual_tol = 0.0;
};

FreudTable build_freud_table(int n_max, int precision_digits, const NewtonOptions& opts = {});

// Forward recursion of the string equation from the exact a_1^2. Uses at least
// 8 * n_max working digits internally, then rounds to `precision_digits`.
FreudTable build_forward_table(int n_max, int precision_digits);

/// (n/12)^{1/2} (1 + 1/(24 n^2)).
double lew_quarles_estimate(int n);

struct StieltjesOptions {
    // Maximum |a_sq| change allowed when the point count is doubled.
    double agreement_tol = 1e-12;
};

FreudTable stieltjes_oracle(int n_max, int quadrature_points, const StieltjesOptions& opts = {});

// |4 a_n^2 (a_{n+1}^2 + a_n^2 + a_{n-1}^2) - n|, for 1 <= n <= n_max - 1.
HpReal string_residual(const FreudTable& t, int n);

}  // namespace fsop
