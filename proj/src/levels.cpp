#include "zenolab/levels.hpp"

#include <algorithm>
#include <cmath>

namespace zenolab {

namespace {
constexpr double pi = 3.141592653589793238462643383279502884;

double level_equation_deriv(double u, double sigma) {
    double rho = std::sqrt(u - sigma * sigma);
    return -sigma / rho * std::sin(sigma) + rho * std::cos(sigma) +
           std::cos(sigma) - sigma * std::sin(sigma);
}

// Bisection to ~1e-13 of the bracket, then safeguarded Newton polish.
double solve_in_bracket(double u, double lo, double hi) {
    double flo = level_equation(u, lo);
    for (int i = 0; i < 80 && hi - lo > 1e-13 * hi; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = level_equation(u, mid);
        if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 8; ++i) {
        double f = level_equation(u, x);
        double df = level_equation_deriv(u, x);
        if (df == 0.0) break;
        double step = f / df;
        double next = x - step;
        if (next <= lo || next >= hi) break;  // safeguard: stay bracketed
        x = next;
        if (std::abs(step) <= 1e-16 * x) break;
    }
    return x;
}
}  // namespace

double level_equation(double u, double sigma) {
    return std::sqrt(u - sigma * sigma) * std::sin(sigma) +
           sigma * std::cos(sigma);
}

std::vector<QuasiLevel> find_levels(const ModelParams& params,
                                    const Tolerances& tol) {
    std::vector<QuasiLevel> out;
    const double su = std::sqrt(params.u);
    const double residual_cap = tol.level_residual * std::max(1.0, su);
    for (int n = 1;; ++n) {
        double lo = (2 * n - 1) * pi / 2.0;
        if (lo >= su) break;
        double hi = std::min(n * pi, su);
        // nudge off the exact endpoints; g is finite there but sqrt(u-s^2)
        // at s=su is exactly zero and we want strict interior brackets
        double lo_in = lo + 1e-14 * std::max(1.0, lo);
        double hi_in = hi - 1e-14 * std::max(1.0, hi);
        if (level_equation(params.u, lo_in) *
                level_equation(params.u, hi_in) > 0.0)
            continue;
        double root = solve_in_bracket(params.u, lo_in, hi_in);
        QuasiLevel lvl;
        lvl.index = int(out.size()) + 1;
        lvl.sigma0 = root;
        lvl.arho0 = std::sqrt(params.u - root * root);
        lvl.e0_over_v0 = root * root / params.u;
        lvl.c1_sq = 2.0 * lvl.arho0 / (1.0 + lvl.arho0);
        lvl.shallow = lvl.arho0 < 0.5;
        if (std::abs(level_equation(params.u, root)) > residual_cap)
            throw numerical_error("level root residual exceeds tolerance");
        out.push_back(lvl);
    }
    return out;
}

double level_norm(const QuasiLevel& level) {
    return 2.0 * level.arho0 / (1.0 + level.arho0);
}

double bound_wavefunction_at(const QuasiLevel& level, double r_over_a) {
    double c1 = std::sqrt(level.c1_sq);
    if (r_over_a <= 1.0) return c1 * std::sin(level.sigma0 * r_over_a);
    double d2 = c1 * std::sin(level.sigma0) * std::exp(level.arho0);
    return d2 * std::exp(-level.arho0 * r_over_a);
}

}  // namespace zenolab
