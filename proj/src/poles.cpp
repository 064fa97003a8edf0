#include "zenolab/poles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "zenolab/quartic.hpp"

namespace zenolab {

namespace {

using cplx = std::complex<double>;

double monic_residual(const std::array<double, 5>& c, cplx z) {
  cplx p = z + c[3] / c[4];
  p = p * z + c[2] / c[4];
  p = p * z + c[1] / c[4];
  p = p * z + c[0] / c[4];
  return std::abs(p);
}

}  // namespace

Pole pole2(const SpectralShape& shape, const QuasiLevel& level) {
  double s = level.sigma0;
  double r = level.arho0;
  double u = s * s + r * r;
  Pole z0;
  z0.x = shape.sigma0 + shape.gamma * (s * s - r * r) / u;
  z0.y = shape.gamma * 2.0 * s * r / u;
  return z0;
}

PoleSet pole4(const TaylorCoeffs& taylor, const QuasiLevel& level) {
  (void)level;  // identity is carried by taylor.sigma0
  if (taylor.order < 4) {
    throw numerical_error("pole extraction needs an order-4 expansion");
  }
  if (!(taylor.c[4] > 0.0)) {
    throw numerical_error(
        "quartic term not upward-opening: four-pole structure absent");
  }
  // Rescale by c2 before solving; the overall line-shape magnitude grows like
  // the barrier transmission inverse and would otherwise risk overflow.
  double c2 = taylor.c[2];
  std::array<double, 5> q;
  for (int k = 0; k <= 4; ++k) q[k] = taylor.c[k] / c2;
  auto roots = quartic_roots(q);

  std::vector<cplx> upper;
  for (auto z : roots) {
    if (z.imag() > 0.0) upper.push_back(z);
  }
  if (upper.size() != 2) {
    throw numerical_error("four-pole structure absent: expected two conjugate "
                          "pairs off the real axis");
  }
  for (auto zu : upper) {
    bool paired = false;
    for (auto z : roots) {
      if (std::abs(z - std::conj(zu)) <=
          1e-12 * (1.0 + std::abs(zu))) {
        paired = true;
      }
    }
    if (!paired) throw numerical_error("non-conjugate root set");
  }
  if (upper[0].imag() > upper[1].imag()) std::swap(upper[0], upper[1]);

  PoleSet ps;
  ps.z1 = Pole{taylor.sigma0 + upper[0].real(), upper[0].imag()};
  ps.z2 = Pole{taylor.sigma0 + upper[1].real(), upper[1].imag()};
  ps.residual1 = monic_residual(q, upper[0]);
  ps.residual2 = monic_residual(q, upper[1]);
  return ps;
}

SurvivalParams survival_params(const PoleSet& ps, const SpectralShape& shape,
                               const QuasiLevel& level) {
  SurvivalParams sp;
  sp.x1 = ps.z1.x;
  sp.y1 = ps.z1.y;
  sp.x2 = ps.z2.x;
  sp.y2 = ps.z2.y;
  double g1 = sp.x1 * sp.y1;
  double g2 = sp.x2 * sp.y2;
  if (!(g1 > 0.0)) {
    throw numerical_error(
        "nonpositive x1*y1: root classification is unphysical");
  }
  if (!(g2 > 0.0)) {
    throw numerical_error(
        "nonpositive x2*y2: root classification is unphysical");
  }

  cplx z1 = ps.z1.as_complex();
  cplx z2 = ps.z2.as_complex();
  sp.alpha = std::arg((std::conj(z1) - z2) / (z1 - std::conj(z2)));
  sp.beta = sp.x1 * sp.x1 - sp.x2 * sp.x2 + sp.y2 * sp.y2 - sp.y1 * sp.y1;
  double q = sp.y1 / sp.y2;
  sp.n_factor = 1.0 / (1.0 + q * q + 2.0 * q * std::cos(sp.alpha));
  sp.tau1_tilde = 1.0 / (4.0 * g1);
  sp.tau2_tilde = 1.0 / (4.0 * g2);
  auto tau0 = tau0_closed_form(shape, level);
  sp.tau0_exact = tau0.first;
  sp.tau0_approx = tau0.second;

  if (g2 / g1 <= 10.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "decay-rate separation x2*y2/(x1*y1) = %.6g is below 10; "
                  "two-scale split degraded",
                  g2 / g1);
    sp.warnings.emplace_back(buf);
  }
  return sp;
}

std::pair<double, double> tau0_closed_form(const SpectralShape& shape,
                                           const QuasiLevel& level) {
  Pole z0 = pole2(shape, level);
  double exact = 1.0 / (4.0 * z0.x * z0.y);
  double s = level.sigma0;
  double r = level.arho0;
  // K r / (16 s (1+r)) == exp(2 r w) (1+r) u^2 / (16 s^3 r^3)
  double approx = shape.K * r / (16.0 * s * (1.0 + r));
  return {exact, approx};
}

}  // namespace zenolab
