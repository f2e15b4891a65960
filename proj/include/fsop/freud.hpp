#pragma once

#include "fsop/coeffs.hpp"

#include <array>
#include <vector>

namespace fsop {

constexpr int kMaxDeriv = 3;
using Derivs = std::array<Real, kMaxDeriv + 1>;

/// F_n and F_{n-1} at x with derivatives up to `max_deriv` (higher entries 0).
struct EvalChain {
    int n = 0;
    Real x = 0;
    int max_deriv = 0;
    Derivs value{};  // F_n^{(j)}(x)
    Derivs prev{};   // F_{n-1}^{(j)}(x); zero for n = 0
    Real phi = 0;    // a_{n+1}^2 + a_n^2 + x^2, when n + 1 <= n_max
};

EvalChain eval_chain(const FreudTable& t, int n, Real x, int max_deriv = 0);

// F_0..F_n at x with derivatives, written to out[0..n].
void eval_all(const FreudTable& t, int n, Real x, int max_deriv, std::vector<Derivs>& out);

// F_n^{(j)}(x) in full table precision, for certification runs.
std::array<HpReal, kMaxDeriv + 1> eval_hp(const FreudTable& t, int n, const HpReal& x);

// a_{n+1}^2 + a_n^2 + x^2.
Real phi(const FreudTable& t, int n, Real x);

/// F_n^{(j)}(0) for j = 0..3. Parity zeros are stored as exact zeros.
struct BoundaryValues {
    std::vector<Real> f0, f1, f2, f3;
    int n_max() const { return static_cast<int>(f0.size()) - 1; }
};

BoundaryValues boundary_values(const FreudTable& t, int n_max);

struct KernelValues {
    int n = 0;
    Real k00 = 0;  // K_n(0,0)
    Real k01 = 0;  // K_n^{(0,1)}(0,0), zero by symmetry
    Real k11 = 0;  // K_n^{(1,1)}(0,0)
};

// K_n(x,y) = sum_{k<=n} F_k(x) F_k(y) / ||F_k||^2.
Real kernel(const FreudTable& t, int n, Real x, Real y);

// Sums of squares of orthonormal boundary values.
KernelValues kernel_at_zero(const FreudTable& t, int n);

// Same quantities from the boundary values of F_{n+1}, F_n alone (confluent
// Christoffel-Darboux forms). Used to cross-check kernel_at_zero.
KernelValues kernel_at_zero_confluent(const FreudTable& t, int n);

// K_n(0,0) and K_n^{(1,1)}(0,0) for every n <= t.n_max.
struct KernelZeroTable {
    std::vector<Real> k00, k11;
};
KernelZeroTable kernel_zero_table(const FreudTable& t, const BoundaryValues& bv);

/// x-derivatives of K_n(x,0) and K_n^{(0,1)}(x,0).
struct KernelX0 {
    Derivs k{};
    Derivs k01{};
};

KernelX0 kernel_x0(const FreudTable& t, int n, Real x, int max_deriv = 0);

// Christoffel-Darboux quotient forms of K_n(x,0) and K_n^{(0,1)}(x,0); x != 0.
KernelX0 kernel_x0_quotient(const FreudTable& t, int n, Real x);

}  // namespace fsop
