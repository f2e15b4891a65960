#include "fsop/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace fsop {

Polynomial::Polynomial(std::initializer_list<Real> coeffs) : c_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Real> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(Real c) { return Polynomial(std::vector<Real>{c}); }

Polynomial Polynomial::monomial(Real c, int power) {
    if (power < 0) throw DomainError("negative monomial power");
    std::vector<Real> v(static_cast<std::size_t>(power) + 1, 0);
    v[power] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Real Polynomial::max_abs_coeff() const {
    Real m = 0;
    for (Real v : c_) m = std::max(m, std::fabs(v));
    return m;
}

Real Polynomial::operator()(Real x) const {
    Real r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::complex<Real> Polynomial::operator()(std::complex<Real> x) const {
    std::complex<Real> r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Real> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<Real>(i) * c_[i];
    return Polynomial(std::move(d));
}

int Polynomial::origin_order() const {
    int k = 0;
    while (k < static_cast<int>(c_.size()) && c_[k] == 0) ++k;
    return k;
}

Polynomial Polynomial::shift_down(int k) const {
    if (k == 0) return *this;
    if (origin_order() < k) throw DomainError("shift_down: polynomial not divisible by x^k");
    return Polynomial(std::vector<Real>(c_.begin() + k, c_.end()));
}

Polynomial Polynomial::normalized() const {
    const Real m = max_abs_coeff();
    if (m == 0) return *this;
    return *this * (1 / m);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(Real s) {
    for (Real& v : c_) v *= s;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Real> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
}

std::vector<std::complex<Real>> polynomial_roots(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("roots of the zero polynomial");
    const int zeros_at_origin = p.origin_order();
    const Polynomial q = p.shift_down(zeros_at_origin);
    std::vector<std::complex<Real>> roots(static_cast<std::size_t>(zeros_at_origin), 0);
    const int d = q.degree();
    if (d <= 0) return roots;

    using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
    Mat comp = Mat::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -q.coeff(i) / q.leading();
    Eigen::EigenSolver<Mat> solver(comp, false);
    if (solver.info() != Eigen::Success) throw NumericError("companion eigensolver failed");
    for (int i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()[i]);
    return roots;
}

std::vector<Real> real_roots(const Polynomial& p, Real imag_tol) {
    std::vector<Real> out;
    for (const auto& r : polynomial_roots(p))
        if (std::fabs(r.imag()) <= imag_tol * std::max<Real>(1, std::abs(r))) out.push_back(r.real());
    std::sort(out.begin(), out.end());
    return out;
}

Real relative_coeff_distance(const Polynomial& a, const Polynomial& b) {
    const Real scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
    if (scale == 0) return 0;
    return (a - b).max_abs_coeff() / scale;
}

RationalFn::RationalFn(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    const int common = std::min(num_.origin_order(), den_.origin_order());
    if (common > 0) {
        num_ = num_.shift_down(common);
        den_ = den_.shift_down(common);
    }
    const Real lead = den_.leading();
    if (lead != 1) {
        num_ *= 1 / lead;
        den_ *= 1 / lead;
    }
}

RationalFn RationalFn::derivative() const {
    return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

Real rational_distance(const RationalFn& a, const RationalFn& b) {
    return relative_coeff_distance(a.num() * b.den(), b.num() * a.den());
}

}  // namespace fsop
