#pragma once

#include "fsop/types.hpp"

#include <vector>

namespace fsop {

struct LineFit {
    Real slope = 0;
    Real intercept = 0;
    Real r_squared = 0;
    std::size_t points = 0;
};

// Ordinary least squares y = intercept + slope * x.
LineFit least_squares(const std::vector<Real>& x, const std::vector<Real>& y);

// Fit of log|y| against log x; entries with y == 0 are rejected.
LineFit log_log_fit(const std::vector<Real>& x, const std::vector<Real>& y);

}  // namespace fsop
