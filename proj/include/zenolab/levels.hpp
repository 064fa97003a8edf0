#pragma once

#include <vector>

#include "zenolab/model.hpp"

namespace zenolab {

// One quasi-stationary level of the auxiliary well (barrier extended to
// infinity). All fields are a-scaled dimensionless.
struct QuasiLevel {
    int index = 0;          // 1-based, ascending in sigma0
    double sigma0 = 0.0;    // a*k0, root of the level equation
    double arho0 = 0.0;     // sqrt(u - sigma0^2)
    double e0_over_v0 = 0.0;
    double c1_sq = 0.0;     // a*|c1|^2 = 2*arho0/(1+arho0)
    bool shallow = false;   // arho0 < 0.5: too close to the barrier top

    double ak0() const { return sigma0; }
};

// g(sigma) = sqrt(u-sigma^2)*sin(sigma) + sigma*cos(sigma). Roots are the
// levels; this form has no poles on (0, sqrt(u)), unlike the tan version.
double level_equation(double u, double sigma);

// All roots of the level equation on (0, sqrt(u)), ascending. The n-th root
// lies in ((2n-1)pi/2, min(n*pi, sqrt(u))). May be empty.
std::vector<QuasiLevel> find_levels(const ModelParams& params,
                                    const Tolerances& tol = Tolerances{});

// a*|c1|^2 of the bound state, = 2*arho0/(1+arho0).
double level_norm(const QuasiLevel& level);

// u0(r) at r/a = r_over_a, unit-normalized, c1 > 0 convention.
double bound_wavefunction_at(const QuasiLevel& level, double r_over_a);

}  // namespace zenolab
