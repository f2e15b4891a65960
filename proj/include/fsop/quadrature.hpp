#pragma once

#include "fsop/types.hpp"

#include <functional>
#include <vector>

namespace fsop {

/// Discretization of exp(-x^4) dx on [-X, X] by composite 20-point
/// Gauss-Legendre panels. Weights already include exp(-x^4).
struct DiscreteMeasure {
    std::vector<Real> nodes;
    std::vector<Real> weights;
    Real half_width = 0;

    std::size_t size() const { return nodes.size(); }
    Real integrate(const std::function<Real(Real)>& f) const;
};

// Truncation point for integrating polynomials of degree <= 2 * max_degree
// against exp(-x^4). Beyond it the integrand is below ~1e-40 of its peak.
Real freud_truncation(int max_degree);

// `points` is rounded up to a whole number of panels.
DiscreteMeasure freud_measure(int points, Real half_width);

}  // namespace fsop
