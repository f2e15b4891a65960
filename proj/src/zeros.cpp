#include "fsop/zeros.hpp"

#include "fsop/fit.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

namespace fsop {

std::string to_string(ZeroLabel label) {
    switch (label) {
        case ZeroLabel::freud: return "freud";
        case ZeroLabel::sobolev: return "sobolev";
        case ZeroLabel::limit_G: return "limit_G";
        case ZeroLabel::limit_J: return "limit_J";
        case ZeroLabel::kernel01: return "kernel01";
        case ZeroLabel::biquartic_u: return "biquartic_u";
    }
    return "unknown";
}

std::vector<Real> ZeroSet::positive() const {
    std::vector<Real> out;
    for (Real z : zeros)
        if (z > 0) out.push_back(z);
    return out;
}

int ZeroSet::count_with_multiplicity() const {
    const int nonzero = static_cast<int>(std::count_if(zeros.begin(), zeros.end(),
                                                       [](Real z) { return z != 0; }));
    return nonzero + origin_multiplicity;
}

namespace {

int sign_of(Real v) { return (v > 0) - (v < 0); }

// Sign of f just to the right of the origin.
int sign_right_of_origin(const DerivFn& f, int origin_order) {
    if (origin_order > kMaxDeriv) throw DomainError("origin order above 3 is not supported");
    const Derivs d = f(0, origin_order);
    const int s = sign_of(d[origin_order]);
    if (s == 0) throw NumericError("leading derivative at the origin vanishes");
    return s;
}

Real polish(const DerivFn& f, Real lo, Real hi, int s_lo, const RootSearch& opts) {
    while (hi - lo > opts.bisection_width * std::max<Real>(1, std::fabs(hi))) {
        const Real mid = (lo + hi) / 2;
        if (mid <= lo || mid >= hi) break;
        const int s = sign_of(f(mid, 0)[0]);
        if (s == 0) return mid;
        if (s == s_lo)
            lo = mid;
        else
            hi = mid;
    }
    Real x = (lo + hi) / 2;
    Real best = std::fabs(f(x, 0)[0]);
    // A root sitting on a grid point can round to just outside the bracket.
    const Real slack = hi - lo;
    for (int it = 0; it < opts.newton_steps && best > 0; ++it) {
        const Derivs d = f(x, 1);
        if (d[1] == 0) break;
        const Real next = x - d[0] / d[1];
        if (!(next >= lo - slack && next <= hi + slack)) break;
        const Real r = std::fabs(f(next, 0)[0]);
        if (!(r < best)) break;
        x = next;
        best = r;
    }
    return x;
}

}  // namespace

PositiveRoots find_positive_roots(const DerivFn& f, int origin_order, int expected,
                                  std::vector<Real> seeds, const std::string& what,
                                  const RootSearch& opts) {
    PositiveRoots out;
    if (expected == 0) return out;

    seeds.erase(std::remove_if(seeds.begin(), seeds.end(), [](Real s) { return !(s > 0); }),
                seeds.end());
    const Real top = seeds.empty() ? 1 : *std::max_element(seeds.begin(), seeds.end());
    seeds.push_back(top + opts.margin);
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

    const int s0 = sign_right_of_origin(f, origin_order);
    std::vector<Real> grid{0};
    grid.insert(grid.end(), seeds.begin(), seeds.end());

    int found = 0;
    std::vector<int> signs;
    std::vector<Real> values;
    while (true) {
        signs.assign(grid.size(), 0);
        values.assign(grid.size(), 0);
        signs[0] = s0;
        for (std::size_t i = 1; i < grid.size(); ++i) {
            values[i] = f(grid[i], 0)[0];
            signs[i] = sign_of(values[i]);
        }
        found = 0;
        // A grid point that hits a root exactly counts once; the intervals on
        // either side of it do not.
        for (std::size_t i = 1; i < grid.size(); ++i)
            if (signs[i] == 0 || (signs[i - 1] != 0 && signs[i] != signs[i - 1])) ++found;
        if (found >= expected) break;
        if (static_cast<int>(grid.size()) * 2 > opts.max_grid_points)
            throw BracketingFailure(what, found, expected, static_cast<int>(grid.size()));
        std::vector<Real> refined;
        refined.reserve(grid.size() * 2);
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            refined.push_back(grid[i]);
            refined.push_back((grid[i] + grid[i + 1]) / 2);
        }
        refined.push_back(grid.back());
        grid.swap(refined);
    }
    if (found != expected)
        throw BracketingFailure(what, found, expected, static_cast<int>(grid.size()));

    out.grid_points = static_cast<int>(grid.size());
    for (std::size_t i = 1; i < grid.size(); ++i) out.scale = std::max(out.scale, std::fabs(values[i]));
    for (std::size_t i = 1; i < grid.size(); ++i) {
        Real root;
        if (signs[i] == 0) {
            root = grid[i];
        } else if (signs[i - 1] != 0 && signs[i] != signs[i - 1]) {
            root = polish(f, grid[i - 1], grid[i], signs[i - 1], opts);
        } else {
            continue;
        }
        out.roots.push_back(root);
        out.residuals.push_back(std::fabs(f(root, 0)[0]));
    }
    return out;
}

namespace {

ZeroSet mirror(ZeroLabel label, int n, const PositiveRoots& pr, int origin_multiplicity,
               Real origin_residual) {
    ZeroSet z;
    z.label = label;
    z.n = n;
    z.origin_multiplicity = origin_multiplicity;
    z.scale = pr.scale > 0 ? pr.scale : 1;
    z.grid_points = pr.grid_points;
    for (std::size_t i = pr.roots.size(); i-- > 0;) {
        z.zeros.push_back(-pr.roots[i]);
        z.residuals.push_back(pr.residuals[i]);
    }
    if (origin_multiplicity > 0) {
        z.zeros.push_back(0);
        z.residuals.push_back(origin_residual);
    }
    for (std::size_t i = 0; i < pr.roots.size(); ++i) {
        z.zeros.push_back(pr.roots[i]);
        z.residuals.push_back(pr.residuals[i]);
    }
    return z;
}

void append_positive(std::vector<Real>& seeds, const ZeroSet& z) {
    for (Real v : z.zeros)
        if (v > 0) seeds.push_back(v);
}

std::vector<Real> freud_seeds(const FreudTable& ft, int lo, int hi) {
    std::vector<Real> seeds;
    for (int m = std::max(lo, 1); m <= std::min(hi, ft.n_max); ++m) append_positive(seeds, freud_zeros(ft, m));
    return seeds;
}

}  // namespace

ZeroSet freud_zeros(const FreudTable& ft, int n) {
    if (n < 0) throw DomainError("negative degree");
    if (n > ft.n_max) throw TableExhausted(n, ft.n_max);
    ZeroSet z;
    z.label = ZeroLabel::freud;
    z.n = n;
    if (n == 0) return z;

    using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
    using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
    Vec diag = Vec::Zero(n);
    Vec sub(std::max(n - 1, 0));
    for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(ft.a_sq_r[k]);
    Eigen::SelfAdjointEigenSolver<Mat> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("tridiagonal eigensolver failed");

    PositiveRoots pr;
    for (int i = 0; i < n; ++i) {
        Real x = solver.eigenvalues()[i];
        if (x <= 0) continue;
        const EvalChain c = eval_chain(ft, n, x, 1);
        if (c.value[1] != 0) {
            const Real next = x - c.value[0] / c.value[1];
            if (std::fabs(eval_chain(ft, n, next).value[0]) <= std::fabs(c.value[0])) x = next;
        }
        pr.roots.push_back(x);
    }
    // Guard against a tiny positive eigenvalue that belongs to the origin.
    if (n % 2 == 1 && static_cast<int>(pr.roots.size()) > n / 2) pr.roots.erase(pr.roots.begin());
    std::sort(pr.roots.begin(), pr.roots.end());

    Real scale = 0;
    Real prev = 0;
    for (Real r : pr.roots) {
        scale = std::max(scale, std::fabs(eval_chain(ft, n, (prev + r) / 2).value[0]));
        pr.residuals.push_back(std::fabs(eval_chain(ft, n, r).value[0]));
        prev = r;
    }
    pr.scale = std::max<Real>(scale, 1);
    return mirror(ZeroLabel::freud, n, pr, n % 2, 0);
}

ZeroSet q_zeros(const SobolevTable& st, const FreudTable& ft, int n, const RootSearch& opts) {
    if (n < 0) throw DomainError("negative degree");
    if (n > st.n_max) throw TableExhausted(n, st.n_max);
    if (n == 0) {
        ZeroSet z;
        z.label = ZeroLabel::sobolev;
        z.params = st.params;
        return z;
    }
    std::vector<Real> seeds = freud_seeds(ft, n - 1, n + 1);
    try {
        if (n % 2 == 0 && n >= 4) append_positive(seeds, limit_and_kernel_zeros(ft, n, ZeroLabel::limit_G));
        if (n % 2 == 1 && n >= 5) append_positive(seeds, limit_and_kernel_zeros(ft, n, ZeroLabel::limit_J));
    } catch (const BracketingFailure&) {
        // Limit zeros only refine the grid; the search below does not depend on them.
    }
    const DerivFn f = [&](Real x, int d) { return eval_Q(st, ft, n, x, d); };
    const PositiveRoots pr = find_positive_roots(f, n % 2, n / 2, seeds,
                                                 "Q_" + std::to_string(n), opts);
    ZeroSet z = mirror(ZeroLabel::sobolev, n, pr, n % 2, 0);
    z.params = st.params;
    return z;
}

ZeroSet limit_and_kernel_zeros(const FreudTable& ft, int n, ZeroLabel label, const RootSearch& opts) {
    const std::vector<Real> seeds = freud_seeds(ft, n - 1, n + 1);
    switch (label) {
        case ZeroLabel::limit_G: {
            if (n < 2 || n % 2 != 0) throw DomainError("G_n needs even n >= 2");
            const DerivFn f = [&](Real x, int d) { return eval_limit_poly(ft, n, x, d); };
            return mirror(label, n, find_positive_roots(f, 2, n / 2 - 1, seeds, "G_" + std::to_string(n), opts),
                          2, 0);
        }
        case ZeroLabel::limit_J: {
            if (n < 3 || n % 2 != 1) throw DomainError("J_n needs odd n >= 3");
            const DerivFn f = [&](Real x, int d) { return eval_limit_poly(ft, n, x, d); };
            return mirror(label, n,
                          find_positive_roots(f, 3, (n - 1) / 2 - 1, seeds, "J_" + std::to_string(n), opts),
                          3, 0);
        }
        case ZeroLabel::kernel01: {
            if (n < 1 || n % 2 != 1) throw DomainError("kernel01 zeros need odd n >= 1");
            const DerivFn f = [&](Real x, int d) { return kernel_x0(ft, n, x, d).k01; };
            return mirror(label, n,
                          find_positive_roots(f, 1, (n - 1) / 2, seeds, "K01_" + std::to_string(n), opts),
                          1, 0);
        }
        default:
            throw DomainError("limit_and_kernel_zeros: unsupported label " + to_string(label));
    }
}

InterlacingReport interlacing_report(const SobolevTable& st, const FreudTable& ft, int n) {
    if (n < 1) throw DomainError("interlacing_report needs n >= 1");
    InterlacingReport rep;
    rep.n = n;
    rep.lower = q_zeros(st, ft, n);
    rep.upper = q_zeros(st, ft, n + 1);
    const auto& lo = rep.lower.zeros;
    const auto& up = rep.upper.zeros;
    for (std::size_t i = 0; i + 1 < up.size(); ++i) {
        const auto inside = std::count_if(lo.begin(), lo.end(), [&](Real z) { return z > up[i] && z < up[i + 1]; });
        rep.gap_ok.push_back(inside == 1);
    }
    // Slot of upper zero i is (lo[i-1], lo[i]) with open ends at the extremes.
    for (std::size_t i = 0; i < up.size(); ++i) {
        const bool above = i == 0 || up[i] > lo[i - 1];
        const bool below = i == lo.size() || up[i] < lo[i];
        rep.misplaced.push_back(!(above && below));
    }
    rep.interlaced = std::all_of(rep.gap_ok.begin(), rep.gap_ok.end(), [](bool b) { return b; });
    return rep;
}

M1Sweep m1_sweep(const FreudTable& ft, int n_odd, const std::vector<Real>& m1_grid, Real M0,
                 Real tail_start) {
    if (n_odd < 3 || n_odd % 2 != 1) throw DomainError("m1_sweep needs odd n >= 3");
    if (m1_grid.size() < 2) throw ConfigError("m1_sweep needs at least two grid points");
    for (std::size_t i = 0; i < m1_grid.size(); ++i) {
        if (!(m1_grid[i] > 0)) throw ConfigError("m1_sweep grid must be positive");
        if (i > 0 && !(m1_grid[i] > m1_grid[i - 1])) throw ConfigError("m1_sweep grid must increase");
    }

    M1Sweep sw;
    sw.n_odd = n_odd;
    sw.M0 = M0;
    sw.grid = m1_grid;
    sw.kernel11 = kernel_at_zero(ft, n_odd - 2).k11;
    const Real K = sw.kernel11;

    const std::vector<Real> x = freud_zeros(ft, n_odd).positive();
    std::vector<Real> y{0};
    for (Real v : limit_and_kernel_zeros(ft, n_odd, ZeroLabel::limit_J).positive()) y.push_back(v);
    const int count = n_odd / 2;

    std::vector<std::vector<Real>> eta(count);
    for (Real M1 : m1_grid) {
        const SobolevTable st = build_sobolev_table(ft, {M0, M1}, n_odd);
        const std::vector<Real> pos = q_zeros(st, ft, n_odd).positive();
        for (int k = 0; k < count; ++k) eta[k].push_back(pos[k]);
    }

    std::vector<std::size_t> tail;
    for (std::size_t i = 0; i < m1_grid.size(); ++i)
        if (m1_grid[i] >= tail_start) tail.push_back(i);
    if (tail.size() < 2) tail = {m1_grid.size() - 2, m1_grid.size() - 1};

    const BoundaryValues bv = boundary_values(ft, n_odd);
    for (int k = 0; k < count; ++k) {
        ZeroTrajectory tr;
        tr.k = k + 1;
        tr.limit = y[k];
        tr.freud_zero = x[k];
        tr.eta = eta[k];
        for (std::size_t i = 1; i < tr.eta.size(); ++i)
            if (!(tr.eta[i] < tr.eta[i - 1])) tr.decreasing = false;

        const Real y2 = tr.limit * tr.limit;
        for (std::size_t i = 0; i < m1_grid.size(); ++i)
            tr.scaled_gap.push_back(m1_grid[i] * K * (tr.eta[i] * tr.eta[i] - y2));

        const std::size_t ia = tail[tail.size() - 2], ib = tail.back();
        const Real ma = m1_grid[ia], mb = m1_grid[ib];
        const Real ea = tr.eta[ia] * tr.eta[ia], eb = tr.eta[ib] * tr.eta[ib];
        tr.extrapolated_sq = (mb * eb - ma * ea) / (mb - ma);
        tr.limit_error_sq = std::fabs(tr.extrapolated_sq - y2);

        if (k == 0) {
            const Derivs j = eval_limit_poly(ft, n_odd, 0, 3);
            tr.predicted_constant = -6 * bv.f1[n_odd] / j[3];
        } else {
            const Real fy = eval_chain(ft, n_odd, tr.limit).value[0];
            const Real jp = eval_limit_poly(ft, n_odd, tr.limit, 1)[1];
            tr.predicted_constant = -2 * tr.limit * fy / jp;
        }

        std::vector<Real> ms, gaps;
        Real log_sum = 0;
        int sign = 0;
        for (std::size_t i : tail) {
            const Real gap = tr.eta[i] * tr.eta[i] - y2;
            ms.push_back(m1_grid[i]);
            gaps.push_back(gap);
            log_sum += std::log(std::fabs(gap)) + std::log(m1_grid[i]);
            sign = sign_of(gap);
        }
        tr.fitted_constant = sign * K * std::exp(log_sum / static_cast<Real>(tail.size()));
        tr.fitted_slope = log_log_fit(ms, gaps).slope;
        sw.trajectories.push_back(tr);
    }
    return sw;
}

void write_zero_csv(std::ostream& os, const std::vector<ZeroSet>& sets, bool full_precision) {
    os << "label,n,M0,M1,k,zero,residual\n";
    const auto old_flags = os.flags();
    const auto old_prec = os.precision();
    for (const ZeroSet& z : sets) {
        for (std::size_t i = 0; i < z.zeros.size(); ++i) {
            os << to_string(z.label) << ',' << z.n << ',';
            os << std::setprecision(full_precision ? 21 : 6) << std::defaultfloat
               << static_cast<double>(z.params.M0) << ',' << static_cast<double>(z.params.M1) << ','
               << i + 1 << ',';
            if (full_precision)
                os << std::setprecision(21) << std::scientific << z.zeros[i];
            else
                os << std::fixed << std::setprecision(6) << z.zeros[i];
            os << ',' << std::scientific << std::setprecision(3) << z.residuals[i] << '\n';
            os.flags(old_flags);
        }
    }
    os.precision(old_prec);
}

}  // namespace fsop
