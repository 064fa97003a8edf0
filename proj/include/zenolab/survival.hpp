#pragma once

#include "zenolab/poles.hpp"

namespace zenolab {

// Single-exponential decay law from one pole pair.
double p2(double t_tilde, const Pole& z0);

// Full two-pole law (normalized to 1 at t = 0) and its small-q approximation,
// q = y1/y2.
double p4(double t_tilde, const SurvivalParams& sp);
double p4_approx(double t_tilde, const SurvivalParams& sp);

struct ShortTimeCoeffs {
  double a1 = 0.0;  // linear coefficient; identically zero up to rounding
  double a2 = 0.0;  // quadratic coefficient, negative in validated regimes
  double tau_zeno_tilde = 0.0;  // 1/sqrt(-a2); NaN if a2 >= 0
};

// Exact derivatives of the two-pole law at t = 0. The linear term collapses
// algebraically; it is evaluated in compensated arithmetic so the returned
// a1 reflects the identity rather than double rounding noise.
ShortTimeCoeffs short_time_coefficients(const SurvivalParams& sp);

}  // namespace zenolab
