#pragma once

#include <complex>
#include <cstddef>

#include "zenolab/levels.hpp"
#include "zenolab/model.hpp"

namespace zenolab {

struct QuadratureOptions {
  double abs_tol = 1e-10;        // target for the summed panel error estimate
  int max_rounds = 8;            // panel-splitting rounds
  std::size_t max_panels = 4000000;
  // The estimate may plateau at the function-evaluation noise floor (deep
  // levels amplify rounding by 1/gamma); a floor up to this factor times
  // abs_tol is accepted and reported, anything above is an error.
  double noise_cap_factor = 1e4;

  static QuadratureOptions from_tolerances(const Tolerances& tol);
};

struct OracleResult {
  double raw = 0.0;           // |amplitude(t)|^2 as integrated
  double renormalized = 0.0;  // raw divided by the t = 0 value
  double achieved_tol = 0.0;  // error estimate actually reached (t and 0)
  std::size_t panels = 0;
};

// Fourier-type amplitude of the per-level spectral weight over the open
// continuum window, with panels sized to resolve both the peak width and the
// local oscillation. Accepts negative t (the modulus is even in t).
std::complex<double> oracle_amplitude(double t_tilde,
                                      const ModelParams& params,
                                      const QuasiLevel& level,
                                      const QuadratureOptions& opts,
                                      double* err_out = nullptr,
                                      std::size_t* panels_out = nullptr);

// Direct-integration survival probability, raw and renormalized.
OracleResult p_oracle(double t_tilde, const ModelParams& params,
                      const QuasiLevel& level,
                      const QuadratureOptions& opts = {});

}  // namespace zenolab
