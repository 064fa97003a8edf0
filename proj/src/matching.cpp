#include "zenolab/matching.hpp"

#include <cmath>

namespace zenolab {

namespace {
constexpr double pi = 3.141592653589793238462643383279502884;
}

WaveNumbers WaveNumbers::at(const ModelParams& params, double sigma) {
    if (!(sigma > 0.0) || params.u - sigma * sigma < 1e-12 * params.u)
        throw std::domain_error(
            "sigma must lie in (0, sqrt(u)) with u - sigma^2 >= 1e-12 u");
    WaveNumbers wn;
    wn.sigma = sigma;
    wn.arho = std::sqrt(params.u - sigma * sigma);
    return wn;
}

std::complex<double> CoefficientSet::c3() const {
    return c3b * std::exp(std::complex<double>(0.0, -sigma * (1.0 + w)));
}

std::complex<double> CoefficientSet::d3() const {
    return std::conj(c3b) * std::exp(std::complex<double>(0.0, sigma * (1.0 + w)));
}

CoefficientSet match_coefficients(const ModelParams& params,
                                  const WaveNumbers& wn, double mass_scale) {
    CoefficientSet cs;
    cs.sigma = wn.sigma;
    cs.arho = wn.arho;
    cs.w = params.w;

    double sn = std::sin(wn.sigma);
    double cn = std::cos(wn.sigma);
    cs.alpha_plus = sn + wn.sigma / wn.arho * cn;
    cs.alpha_minus = sn - wn.sigma / wn.arho * cn;

    // With c1 = 1: region-2 amplitudes at the x=1 anchor.
    double p2p = 0.5 * cs.alpha_plus;
    double p2m = 0.5 * cs.alpha_minus;

    // Region-3 amplitude at the x=1+w anchor, still with c1 = 1.
    double x = std::exp(wn.arho * params.w);
    double uu = p2p * x + p2m / x;             // u at the outer interface
    double vv = wn.arho * (p2p * x - p2m / x); // u' there
    std::complex<double> c3b(0.5 * uu, -0.5 * vv / wn.sigma);

    // Scale so |C3|^2 = mass_scale / (2 pi sigma); keeps c1 real-positive.
    double target = mass_scale / (2.0 * pi * wn.sigma);
    double lambda = std::sqrt(target) / std::abs(c3b);
    cs.c1 = lambda;
    cs.p2p = lambda * p2p;
    cs.p2m = lambda * p2m;
    cs.c3b = lambda * c3b;
    return cs;
}

std::complex<double> wavefunction_at(const CoefficientSet& coeffs,
                                     double r_over_a) {
    double x = r_over_a;
    if (x < 0.0) throw std::domain_error("r_over_a must be non-negative");
    if (x <= 1.0) return coeffs.c1 * std::sin(coeffs.sigma * x);
    if (x <= 1.0 + coeffs.w) {
        double d = x - 1.0;
        return coeffs.p2p * std::exp(coeffs.arho * d) +
               coeffs.p2m * std::exp(-coeffs.arho * d);
    }
    std::complex<double> ph =
        std::exp(std::complex<double>(0.0, coeffs.sigma * (x - 1.0 - coeffs.w)));
    return coeffs.c3b * ph + std::conj(coeffs.c3b) / ph;
}

double spectral_denominator(const ModelParams& params, double sigma) {
    WaveNumbers::at(params, sigma);  // domain guard
    return spectral_denominator_generic<double>(params.u, params.w, sigma);
}

double spectral_weight(const ModelParams& params, const QuasiLevel& level,
                       double sigma) {
    double pref = 4.0 * (1.0 + level.arho0) / (pi * level.arho0);
    return pref / spectral_denominator(params, sigma);
}

}  // namespace zenolab
