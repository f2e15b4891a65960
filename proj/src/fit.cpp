#include "fsop/fit.hpp"

#include <cmath>

namespace fsop {

LineFit least_squares(const std::vector<Real>& x, const std::vector<Real>& y) {
    if (x.size() != y.size()) throw DomainError("least_squares: size mismatch");
    if (x.size() < 2) throw DomainError("least_squares: need at least two points");
    const auto n = static_cast<Real>(x.size());
    Real mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    Real sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0) throw DomainError("least_squares: degenerate abscissae");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r_squared = syy == 0 ? 1 : sxy * sxy / (sxx * syy);
    f.points = x.size();
    return f;
}

LineFit log_log_fit(const std::vector<Real>& x, const std::vector<Real>& y) {
    if (x.size() != y.size()) throw DomainError("log_log_fit: size mismatch");
    std::vector<Real> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0) throw DomainError("log_log_fit: abscissae must be positive");
        if (y[i] == 0) throw DomainError("log_log_fit: zero ordinate");
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(std::fabs(y[i])));
    }
    return least_squares(lx, ly);
}

}  // namespace fsop
