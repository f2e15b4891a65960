#include "fsop/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>

namespace fsop {

namespace {
constexpr unsigned kPanelOrder = 20;
using Rule = boost::math::quadrature::gauss<Real, kPanelOrder>;
}  // namespace

Real DiscreteMeasure::integrate(const std::function<Real(Real)>& f) const {
    Real sum = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
}

Real freud_truncation(int max_degree) {
    // Largest zero of F_n sits near 2 (n/12)^{1/4}; past that point
    // f_n^2 exp(-x^4) decays at least like exp(-x^4 / 2).
    const Real edge = 2 * std::pow(static_cast<Real>(std::max(max_degree, 1)) / 12, Real(0.25));
    return std::max<Real>(3.1L, edge + 3);
}

DiscreteMeasure freud_measure(int points, Real half_width) {
    const int panels = std::max(1, (points + static_cast<int>(kPanelOrder) - 1) /
                                       static_cast<int>(kPanelOrder));
    const auto& abscissa = Rule::abscissa();
    const auto& weights = Rule::weights();

    DiscreteMeasure m;
    m.half_width = half_width;
    m.nodes.reserve(static_cast<std::size_t>(panels) * kPanelOrder);
    m.weights.reserve(m.nodes.capacity());

    const Real h = 2 * half_width / panels;
    for (int p = 0; p < panels; ++p) {
        const Real mid = -half_width + (p + Real(0.5)) * h;
        const Real half = h / 2;
        for (std::size_t i = 0; i < abscissa.size(); ++i) {
            for (int sign : {-1, 1}) {
                if (abscissa[i] == 0 && sign < 0) continue;
                const Real x = mid + sign * half * abscissa[i];
                const Real x2 = x * x;
                m.nodes.push_back(x);
                m.weights.push_back(half * weights[i] * std::exp(-x2 * x2));
            }
        }
    }
    return m;
}

}  // namespace fsop
