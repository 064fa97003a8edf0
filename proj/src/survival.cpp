#include "zenolab/survival.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "zenolab/dd.hpp"

namespace zenolab {

namespace {

void require_nonnegative(double t_tilde) {
  if (t_tilde < 0.0) {
    throw std::domain_error("survival laws are defined for t >= 0");
  }
}

}  // namespace

double p2(double t_tilde, const Pole& z0) {
  require_nonnegative(t_tilde);
  return std::exp(-4.0 * z0.x * z0.y * t_tilde);
}

double p4(double t_tilde, const SurvivalParams& sp) {
  require_nonnegative(t_tilde);
  double q = sp.y1 / sp.y2;
  double g1 = sp.x1 * sp.y1;
  double g2 = sp.x2 * sp.y2;
  double cross = std::exp(-2.0 * (g1 + g2) * t_tilde) *
                 std::cos(sp.alpha + sp.beta * t_tilde);
  return sp.n_factor * (std::exp(-4.0 * g1 * t_tilde) +
                        q * q * std::exp(-4.0 * g2 * t_tilde) +
                        2.0 * q * cross);
}

double p4_approx(double t_tilde, const SurvivalParams& sp) {
  require_nonnegative(t_tilde);
  double q = sp.y1 / sp.y2;
  double g2 = sp.x2 * sp.y2;
  double bracket = std::exp(-2.0 * g2 * t_tilde) *
                       std::cos(sp.alpha + sp.beta * t_tilde) -
                   std::cos(sp.alpha);
  return std::exp(-4.0 * sp.x1 * sp.y1 * t_tilde) * (1.0 + 2.0 * q * bracket);
}

ShortTimeCoeffs short_time_coefficients(const SurvivalParams& sp) {
  // cos/sin of alpha rewritten in the pole coordinates so the linear-term
  // cancellation happens inside one compensated expression:
  //   cos a = (dx^2 - sy^2)/D, sin a = -2 dx sy / D, D = dx^2 + sy^2.
  dd x1(sp.x1), y1(sp.y1), x2(sp.x2), y2(sp.y2);
  dd dx = x1 - x2;
  dd sy = y1 + y2;
  dd dx2 = dx * dx;
  dd sy2 = sy * sy;
  dd denom = dx2 + sy2;
  dd cos_a = (dx2 - sy2) / denom;
  dd sin_a = dd(-2.0) * dx * sy / denom;
  dd beta = x1 * x1 - x2 * x2 + y2 * y2 - y1 * y1;
  dd core = x1 * y2 + x2 * y1 + (x1 * y1 + x2 * y2) * cos_a +
            dd(0.5) * beta * sin_a;
  dd a1 = dd(-4.0 * sp.n_factor) * (y1 / y2) * core;

  ShortTimeCoeffs out;
  out.a1 = a1.to_double();

  double q = sp.y1 / sp.y2;
  double l1 = 4.0 * sp.x1 * sp.y1;
  double l2 = 4.0 * sp.x2 * sp.y2;
  double c = 0.5 * (l1 + l2);
  double b = sp.beta;
  double ca = std::cos(sp.alpha);
  double sa = std::sin(sp.alpha);
  out.a2 = 0.5 * sp.n_factor *
           (l1 * l1 + q * q * l2 * l2 +
            2.0 * q * ((c * c - b * b) * ca + 2.0 * c * b * sa));
  out.tau_zeno_tilde = out.a2 < 0.0
                           ? 1.0 / std::sqrt(-out.a2)
                           : std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace zenolab
