#pragma once

#include <cmath>
#include <complex>

#include "zenolab/jet.hpp"
#include "zenolab/levels.hpp"
#include "zenolab/model.hpp"

namespace zenolab {

// Below-barrier continuum point, a-scaled. arho = sqrt(u - sigma^2) > 0.
struct WaveNumbers {
    double sigma = 0.0;
    double arho = 0.0;

    static WaveNumbers at(const ModelParams& params, double sigma);
};

// Stationary-state amplitudes for all three regions, C1 real-positive phase
// convention. Region 2/3 coefficients are stored against exponentials
// anchored at the region boundaries so huge exp(arho*w) factors never appear
// explicitly:
//   region 1: c1 * sin(sigma x)
//   region 2: p2p * exp(arho (x-1)) + p2m * exp(-arho (x-1))
//   region 3: c3b * exp(i sigma (x-1-w)) + conj(c3b) * exp(-i sigma (x-1-w))
struct CoefficientSet {
    double c1 = 0.0;
    double p2p = 0.0;
    double p2m = 0.0;
    std::complex<double> c3b;
    double alpha_plus = 0.0;
    double alpha_minus = 0.0;
    double sigma = 0.0;
    double arho = 0.0;
    double w = 0.0;

    // Canonical amplitudes against exp(+-i sigma x); |c3()| == |d3()|.
    std::complex<double> c3() const;
    std::complex<double> d3() const;
};

// Solves the two interface conditions and applies the continuum
// normalization |C3|^2 = mass_scale / (2 pi sigma), mass_scale = m a^2;
// dimensionless callers pass 1.
CoefficientSet match_coefficients(const ModelParams& params,
                                  const WaveNumbers& wn, double mass_scale);

std::complex<double> wavefunction_at(const CoefficientSet& coeffs,
                                     double r_over_a);

// The spectral denominator f(sigma), strictly positive on (0, sqrt(u)).
// Equals 16 |C3|^2 / |C1|^2 (verified as a matrix-path cross-check).
double spectral_denominator(const ModelParams& params, double sigma);

// Per-level spectral density [4(1+arho0)/(pi arho0)] / f(sigma); integrates
// to ~1 over the level's peak in the strongly peaked regime.
double spectral_weight(const ModelParams& params, const QuasiLevel& level,
                       double sigma);

// f evaluated on any scalar-like type supporting +,-,*,/ and sqrt/sin/cos/exp
// (double, or Jet for derivative propagation).
template <class T>
T spectral_denominator_generic(double u, double w, const T& sigma) {
    using std::cos;
    using std::exp;
    using std::sin;
    using std::sqrt;
    T rho = sqrt(u - sigma * sigma);
    T sn = sin(sigma);
    T cs = cos(sigma);
    T ap = sn + sigma * cs / rho;
    T am = sn - sigma * cs / rho;
    T x2 = exp(2.0 * w * rho);
    T sig2 = sigma * sigma;
    return ((x2 * ap * ap + am * am / x2) * u + 2.0 * ap * am * (2.0 * sig2 - u)) / sig2;
}

}  // namespace zenolab
