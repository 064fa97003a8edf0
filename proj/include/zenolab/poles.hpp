#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "zenolab/levels.hpp"
#include "zenolab/spectral.hpp"

namespace zenolab {

// Upper-half-plane representative of a conjugate pole pair, sigma units.
struct Pole {
  double x = 0.0;
  double y = 0.0;  // > 0
  std::complex<double> as_complex() const { return {x, y}; }
};

struct PoleSet {
  Pole z1;  // narrow pair (smaller y)
  Pole z2;  // broad pair
  double residual1 = 0.0;  // monic-quartic residual at each chosen root
  double residual2 = 0.0;
};

// Everything the two-pole survival law needs, all in t-tilde units.
struct SurvivalParams {
  double x1 = 0.0, y1 = 0.0;
  double x2 = 0.0, y2 = 0.0;
  double alpha = 0.0;     // arg[(z1* - z2)/(z1 - z2*)], principal branch
  double beta = 0.0;      // x1^2 - x2^2 + y2^2 - y1^2
  double n_factor = 1.0;  // 1/(1 + q^2 + 2 q cos alpha), q = y1/y2
  double tau1_tilde = 0.0;
  double tau2_tilde = 0.0;
  double tau0_exact = 0.0;
  double tau0_approx = 0.0;
  std::vector<std::string> warnings;
};

// Resonance pole from the quadratic truncation of the line-shape expansion.
Pole pole2(const SpectralShape& shape, const QuasiLevel& level);

// Both poles from the quartic truncation. Requires an order-4 expansion with
// upward-opening quartic term and a root set made of two conjugate pairs off
// the real axis.
PoleSet pole4(const TaylorCoeffs& taylor, const QuasiLevel& level);

SurvivalParams survival_params(const PoleSet& ps, const SpectralShape& shape,
                               const QuasiLevel& level);

// (exact, approximate) single-pole lifetime in t-tilde units. The exact value
// is 1/(4 x0 y0); the approximate one drops the subleading line-shape shift.
std::pair<double, double> tau0_closed_form(const SpectralShape& shape,
                                           const QuasiLevel& level);

}  // namespace zenolab
