#include "zenolab/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "zenolab/jet.hpp"
#include "zenolab/matching.hpp"

namespace zenolab {

SpectralShape shape_constants(const ModelParams& params,
                              const QuasiLevel& level, bool allow_shallow) {
    if (level.shallow && !allow_shallow)
        throw numerical_error("shallow level: peaked approximation invalid");
    double s = level.sigma0;
    double r = level.arho0;
    double s2 = s * s, r2 = r * r;
    double sum = s2 + r2;
    double damp = std::exp(-2.0 * r * params.w);

    SpectralShape sh;
    sh.sigma0 = s;
    sh.K = (1.0 / damp) * (1.0 + r) * (1.0 + r) * sum * sum / (s2 * r2 * r2);
    sh.epsilon = damp * 4.0 * s * r2 * (s2 - r2) / ((1.0 + r) * sum * sum);
    sh.gamma = damp * 2.0 * s * r2 / ((1.0 + r) * sum);
    return sh;
}

TaylorCoeffs taylor_expand(const ModelParams& params, const QuasiLevel& level,
                           int order, bool allow_shallow) {
    if (level.shallow && !allow_shallow)
        throw numerical_error("shallow level: peaked approximation invalid");
    if (order != 2 && order != 4)
        throw std::invalid_argument("expansion order must be 2 or 4");

    Jet sigma = Jet::variable(level.sigma0);
    Jet f = spectral_denominator_generic<Jet>(params.u, params.w, sigma);

    TaylorCoeffs tc;
    tc.sigma0 = level.sigma0;
    tc.order = order;
    for (int j = 0; j < 5; ++j) tc.c[j] = f.c[j];
    if (order == 2) {
        tc.c[3] = 0.0;
        tc.c[4] = 0.0;
    }
    if (tc.c[0] < 0.0)
        throw numerical_error("negative f(sigma0): expansion point invalid");
    return tc;
}

}  // namespace zenolab
