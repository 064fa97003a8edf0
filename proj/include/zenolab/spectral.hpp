#pragma once

#include <array>

#include "zenolab/levels.hpp"
#include "zenolab/model.hpp"

namespace zenolab {

// Closed-form local shape of f near a level: f ~ K [(ds)^2 - eps*ds + gamma^2]
// to leading order in exp(-2 arho0 w). gamma uses the algebraically cancelled
// form, finite and positive also at ak0 = arho0.
struct SpectralShape {
    double sigma0 = 0.0;
    double K = 0.0;
    double epsilon = 0.0;
    double gamma = 0.0;
};

struct TaylorCoeffs {
    double sigma0 = 0.0;
    std::array<double, 5> c{};  // c[j] = f^(j)(sigma0) / j!
    int order = 4;              // 2 or 4; order 2 zeroes c[3], c[4]
};

// Shallow levels (arho0 < 0.5) break the peaked approximation and are
// rejected unless allow_shallow; the constants still evaluate when forced.
SpectralShape shape_constants(const ModelParams& params, const QuasiLevel& level,
                              bool allow_shallow = false);

// Taylor coefficients of f about sigma0 via order-4 jet propagation.
TaylorCoeffs taylor_expand(const ModelParams& params, const QuasiLevel& level,
                           int order = 4, bool allow_shallow = false);

}  // namespace zenolab
