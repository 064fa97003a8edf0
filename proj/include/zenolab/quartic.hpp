#pragma once

#include <array>
#include <complex>

#include "zenolab/model.hpp"

namespace zenolab {

// Roots of c[0] + c[1] z + c[2] z^2 + c[3] z^3 + c[4] z^4, c[4] != 0.
// Real coefficients assumed: the returned set is closed under conjugation
// (enforced by pairing + symmetrization). Deterministic order: ascending
// (Im, Re). Residuals satisfy |p(z)| <= 1e-10 |c4| max(1,|z|)^4, else
// numerical_error.
std::array<std::complex<double>, 4> quartic_roots(
    const std::array<double, 5>& c);

}  // namespace zenolab
