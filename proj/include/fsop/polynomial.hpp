#pragma once

#include "fsop/types.hpp"

#include <complex>
#include <initializer_list>
#include <vector>

namespace fsop {

/// Dense real polynomial, coefficients in ascending powers of x.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Real> coeffs);
    explicit Polynomial(std::vector<Real> coeffs);

    static Polynomial constant(Real c);
    static Polynomial monomial(Real c, int power);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Real>& coeffs() const { return c_; }
    Real coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Real(0); }
    Real leading() const { return c_.empty() ? Real(0) : c_.back(); }
    Real max_abs_coeff() const;

    Real operator()(Real x) const;
    std::complex<Real> operator()(std::complex<Real> x) const;
    Polynomial derivative() const;

    // Power of x dividing the polynomial exactly (leading zero coefficients).
    int origin_order() const;
    Polynomial shift_down(int k) const;  // divide by x^k; requires origin_order() >= k

    // Scaled so that max |coeff| = 1.
    Polynomial normalized() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(Real s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, Real s) { return a *= s; }
    friend Polynomial operator*(Real s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= -1; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Real> c_;
};

// All complex roots (companion-matrix eigenvalues). Exact zeros at the origin
// are returned exactly.
std::vector<std::complex<Real>> polynomial_roots(const Polynomial& p);

// Real roots: complex roots with |Im| <= imag_tol * max(1, |root|).
std::vector<Real> real_roots(const Polynomial& p, Real imag_tol = 1e-8L);

// max_k |a_k - b_k| / max(max|a|, max|b|); 0 when both are zero.
Real relative_coeff_distance(const Polynomial& a, const Polynomial& b);

/// Ratio of polynomials with a monic denominator. No gcd cancellation beyond
/// common powers of x that vanish exactly.
class RationalFn {
public:
    RationalFn() : num_(), den_(Polynomial::constant(1)) {}
    RationalFn(Polynomial num, Polynomial den);
    RationalFn(const Polynomial& p) : RationalFn(p, Polynomial::constant(1)) {}  // NOLINT

    static RationalFn constant(Real c) { return RationalFn(Polynomial::constant(c)); }
    static RationalFn x() { return RationalFn(Polynomial{0, 1}); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Real operator()(Real x) const { return num_(x) / den_(x); }
    RationalFn derivative() const;

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a) { return RationalFn(-a.num_, a.den_); }

private:
    void normalize();
    Polynomial num_, den_;
};

// Cross-multiplied distance of a = p/q and b = r/s: coefficients of p s - r q
// relative to the larger of the two products.
Real rational_distance(const RationalFn& a, const RationalFn& b);

}  // namespace fsop
