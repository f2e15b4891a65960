#pragma once

#include "fsop/sobolev.hpp"

#include <functional>
#include <iosfwd>
#include <string>

namespace fsop {

enum class ZeroLabel { freud, sobolev, limit_G, limit_J, kernel01, biquartic_u };

std::string to_string(ZeroLabel label);

/// Sorted real zeros of a named polynomial. A zero at the origin appears once;
/// its multiplicity is recorded separately.
struct ZeroSet {
    ZeroLabel label = ZeroLabel::freud;
    int n = 0;
    SobolevParams params;
    std::vector<Real> zeros;
    std::vector<Real> residuals;  // |p(zero)|
    int origin_multiplicity = 0;
    Real scale = 1;               // max |p| over the bracketing grid
    int grid_points = 0;

    std::vector<Real> positive() const;
    // Total count with the origin multiplicity included.
    int count_with_multiplicity() const;
};

// Value and derivatives of an even or odd function.
using DerivFn = std::function<Derivs(Real x, int max_deriv)>;

struct RootSearch {
    int max_grid_points = 1 << 14;
    Real bisection_width = 1e-9L;
    int newton_steps = 5;
    Real margin = 2;
};

struct PositiveRoots {
    std::vector<Real> roots;
    std::vector<Real> residuals;
    Real scale = 0;
    int grid_points = 0;
};

// Positive zeros of a function with definite parity. `origin_order` is the
// number of derivatives that vanish at 0; it fixes the sign just right of 0.
PositiveRoots find_positive_roots(const DerivFn& f, int origin_order, int expected,
                                  std::vector<Real> seeds, const std::string& what,
                                  const RootSearch& opts = {});

ZeroSet freud_zeros(const FreudTable& ft, int n);
ZeroSet q_zeros(const SobolevTable& st, const FreudTable& ft, int n, const RootSearch& opts = {});

// Zeros of G_n (even n), J_n (odd n) or K^{(0,1)}_n(x,0) (odd n).
ZeroSet limit_and_kernel_zeros(const FreudTable& ft, int n, ZeroLabel label,
                               const RootSearch& opts = {});

/// Interlacing of the zeros of Q_n and Q_{n+1}.
struct InterlacingReport {
    int n = 0;
    std::vector<bool> gap_ok;      // gap i of Q_{n+1} holds exactly one zero of Q_n
    std::vector<bool> misplaced;   // zero i of Q_{n+1} is outside its interlacing slot
    bool interlaced = true;
    ZeroSet lower, upper;
};

InterlacingReport interlacing_report(const SobolevTable& st, const FreudTable& ft, int n);

/// Positive-zero trajectories of Q_{n_odd} as M1 grows, against the limit J_{n_odd}.
struct ZeroTrajectory {
    int k = 0;              // 1-based positive index; y_1 = 0
    Real limit = 0;         // y_k
    Real freud_zero = 0;    // x_k
    std::vector<Real> eta;  // eta_k(M1) over the grid
    bool decreasing = true;
    Real extrapolated_sq = 0;   // eta_k^2 at M1 = infinity, linear in 1/M1
    Real limit_error_sq = 0;    // |extrapolated_sq - y_k^2|
    std::vector<Real> scaled_gap;  // M1 K (eta_k^2 - y_k^2)
    Real predicted_constant = 0;   // -2 y F(y) / J'(y), or -6 F'(0) / J'''(0) at y = 0
    Real fitted_constant = 0;      // from the large-M1 tail with slope -1
    Real fitted_slope = 0;         // free log-log slope of |eta_k^2 - y_k^2|
};

struct M1Sweep {
    int n_odd = 0;
    Real M0 = 0;
    std::vector<Real> grid;
    Real kernel11 = 0;  // K^{(1,1)}_{n_odd-2}(0,0)
    std::vector<ZeroTrajectory> trajectories;
};

// The tail fit uses grid points with M1 >= tail_start (at least the last two).
M1Sweep m1_sweep(const FreudTable& ft, int n_odd, const std::vector<Real>& m1_grid, Real M0 = 0,
                 Real tail_start = 100);

void write_zero_csv(std::ostream& os, const std::vector<ZeroSet>& sets, bool full_precision = false);

}  // namespace fsop
