#pragma once

#include <string>
#include <vector>

#include "zenolab/poles.hpp"
#include "zenolab/survival.hpp"

namespace zenolab {

// Where (and whether) the two-pole law re-crosses the single-exponential
// reference.
struct CrossoverResult {
  bool exists = false;
  double t_star_tilde = 0.0;  // first positive root of phi, t-tilde units
  double lhs = 0.0;           // 2 x2 y2
  double rhs = 0.0;           // -beta tan(alpha)
  double phi_residual = 0.0;  // |phi(t_star)|
};

// phi(t) = exp(-4 x2 y2 t) cos(alpha + 2 beta t) - cos(alpha).
// The probability ratio p4_approx/p2 equals 1 + 2 (y1/y2) phi(t/2), so a
// root of phi marks the crossover at twice its argument.
double phi(double t_tilde, const SurvivalParams& sp);

// Existence decided in the cleared form cos(a) * (2 x2 y2 cos(a) +
// beta sin(a)) < 0, equivalent to lhs < rhs but finite at cos(a) = 0;
// sin(a) = 0 never crosses. When it exists the first root is bracketed by
// stepping at 1/64 of the shorter of envelope and half-period scales.
CrossoverResult crossover(const SurvivalParams& sp);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

LinearFit linear_fit(const std::vector<double>& xs,
                     const std::vector<double>& ys);

struct SweepRow {
  double param = 0.0;  // w, or the inverse decay wavenumber a/arho0
  int level_index = 0;
  double sigma0 = 0.0;
  double arho0 = 0.0;
  double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;
  double tau1_tilde = 0.0, tau2_tilde = 0.0;
  double tau1 = 0.0, tau2 = 0.0;  // physical units
  double tau2_pheno = 0.0;        // physical units
};

struct SweepResult {
  std::vector<SweepRow> rows;  // ascending in param
  LinearFit fit;               // tau2_tilde against param
  std::vector<std::string> warnings;
};

// Broad-pole lifetime against the barrier thickness at fixed u. Points where
// the level is shallow (unless included) or the four-pole structure is absent
// are skipped with a warning; the fit uses the surviving rows.
SweepResult sweep_tau2_vs_w(const ModelParams& base, int level_index,
                            const std::vector<double>& w_values,
                            bool include_shallow = false);

// Broad-pole lifetime against a/arho0 (the inverse barrier momentum) across
// a family of well depths at fixed w. The level identity is carried by
// nearest-sigma0 continuation from the previous point.
SweepResult sweep_tau2_vs_gap(const ModelParams& base, int level_index,
                              const std::vector<double>& u_values,
                              bool include_shallow = false);

// m (b-a) / sqrt(2 m (V0 - E0)) = time_scale * w / (2 arho0), physical units.
double tau2_phenomenological(const ModelParams& params,
                             const QuasiLevel& level);

}  // namespace zenolab
