#include "zenolab/quartic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zenolab {

namespace {

using cplx = std::complex<double>;

cplx horner(const std::array<double, 4>& a, cplx z) {
  // monic: z^4 + a3 z^3 + a2 z^2 + a1 z + a0
  cplx p = z + a[3];
  p = p * z + a[2];
  p = p * z + a[1];
  return p * z + a[0];
}

cplx horner_d(const std::array<double, 4>& a, cplx z) {
  cplx p = 4.0 * z + 3.0 * a[3];
  p = p * z + 2.0 * a[2];
  return p * z + a[1];
}

cplx horner_dd(const std::array<double, 4>& a, cplx z) {
  return (12.0 * z + 6.0 * a[3]) * z + 2.0 * a[2];
}

// Both roots of q2 z^2 + q1 z + q0 as seeds; accuracy is irrelevant here.
void quadratic_seeds(double q2, double q1, double q0, cplx out[2]) {
  cplx sq = std::sqrt(cplx(q1 * q1 - 4.0 * q0 * q2, 0.0));
  out[0] = (-q1 + sq) / (2.0 * q2);
  out[1] = (-q1 - sq) / (2.0 * q2);
}

bool finite(cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

std::array<cplx, 4> quartic_roots(const std::array<double, 5>& c) {
  if (c[4] == 0.0 || !std::isfinite(c[4])) {
    throw std::invalid_argument("quartic: leading coefficient must be nonzero");
  }
  std::array<double, 4> a;  // monic tail
  for (int k = 0; k < 4; ++k) a[k] = c[k] / c[4];

  // Seed from the two quadratic splits of a two-scale quartic: the low pair
  // from (c2, c1, c0), the high pair from (c4, c3, c2). Only valid when both
  // splits are complex: an all-real seed set is invariant under the sweeps
  // (real polynomial, real iterates) and can never reach complex roots.
  // Falls back to the classic geometric start otherwise.
  std::array<cplx, 4> z;
  bool seeded = false;
  if (c[2] != 0.0 && c[1] * c[1] < 4.0 * c[0] * c[2] &&
      c[3] * c[3] < 4.0 * c[2] * c[4]) {
    quadratic_seeds(c[2], c[1], c[0], &z[0]);
    quadratic_seeds(c[4], c[3], c[2], &z[2]);
    seeded = true;
    for (int i = 0; i < 4 && seeded; ++i) {
      if (!finite(z[i])) seeded = false;
      for (int j = i + 1; j < 4; ++j) {
        if (std::abs(z[i] - z[j]) < 1e-8 * (1.0 + std::abs(z[i]))) {
          seeded = false;
        }
      }
    }
  }
  if (!seeded) {
    double radius = 1.0;
    for (int k = 0; k < 4; ++k) radius = std::max(radius, std::abs(a[k]));
    radius += 1.0;
    cplx g(0.4, 0.9);
    cplx p(1.0, 0.0);
    for (int i = 0; i < 4; ++i) {
      p *= g;
      z[i] = radius * p;
    }
  }

  // Durand-Kerner sweeps.
  constexpr int kMaxSweeps = 200;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
      cplx denom(1.0, 0.0);
      for (int j = 0; j < 4; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      if (std::abs(denom) < 1e-280) {
        z[i] += 1e-8 * (1.0 + std::abs(z[i]));
        worst = 1.0;
        continue;
      }
      cplx step = horner(a, z[i]) / denom;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    if (worst <= 1e-15) break;
  }

  // One safeguarded Newton polish per root.
  for (int i = 0; i < 4; ++i) {
    cplx pv = horner(a, z[i]);
    cplx dv = horner_d(a, z[i]);
    if (std::abs(dv) > 0.0) {
      cplx cand = z[i] - pv / dv;
      if (std::abs(horner(a, cand)) < std::abs(pv)) z[i] = cand;
    }
  }

  double scale = 1.0;
  for (int i = 0; i < 4; ++i) scale = std::max(scale, std::abs(z[i]));

  // Same-half-plane clusters are (numerically) double roots: Newton only
  // splits them to ~sqrt(eps), so polish the midpoint on p' instead. A
  // conjugate pair with tiny imaginary part is closer to its partner's
  // conjugate than to the partner, which keeps it out of this branch.
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      double d = std::abs(z[i] - z[j]);
      if (d >= 1e-5 * scale) continue;
      if (std::abs(z[i] - std::conj(z[j])) <= d) continue;
      cplx zc = 0.5 * (z[i] + z[j]);
      for (int it = 0; it < 40; ++it) {
        cplx dv = horner_d(a, zc);
        cplx ddv = horner_dd(a, zc);
        if (std::abs(ddv) == 0.0) break;
        cplx step = dv / ddv;
        zc -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(zc))) break;
      }
      if (std::abs(horner(a, zc)) <=
          std::abs(horner(a, z[i])) + std::abs(horner(a, z[j]))) {
        z[i] = zc;
        z[j] = zc;
      }
    }
  }

  // Restore exact closure under conjugation: minimum-cost involutive
  // matching (2-cycles pair z_i with conj z_j, fixed points force a real
  // root), then symmetrize each orbit.
  struct Matching {
    int pair[4];  // pair[i] == i means self-matched
  };
  static const Matching kMatchings[] = {
      {{1, 0, 3, 2}}, {{2, 3, 0, 1}}, {{3, 2, 1, 0}},
      {{1, 0, 2, 3}}, {{2, 1, 0, 3}}, {{3, 1, 2, 0}},
      {{0, 2, 1, 3}}, {{0, 3, 2, 1}}, {{0, 1, 3, 2}},
      {{0, 1, 2, 3}},
  };
  double best_cost = 0.0;
  int best = -1;
  for (int m = 0; m < 10; ++m) {
    double cost = 0.0;
    for (int i = 0; i < 4; ++i) {
      int j = kMatchings[m].pair[i];
      if (j >= i) cost += std::abs(z[i] - std::conj(z[j]));
    }
    if (best < 0 || cost < best_cost) {
      best = m;
      best_cost = cost;
    }
  }
  for (int i = 0; i < 4; ++i) {
    int j = kMatchings[best].pair[i];
    if (j == i) {
      z[i] = cplx(z[i].real(), 0.0);
    } else if (j > i) {
      cplx mu = 0.5 * (z[i] + std::conj(z[j]));
      z[i] = mu;
      z[j] = std::conj(mu);
    }
  }

  std::sort(z.begin(), z.end(), [](cplx lhs, cplx rhs) {
    if (lhs.imag() != rhs.imag()) return lhs.imag() < rhs.imag();
    return lhs.real() < rhs.real();
  });

  for (int i = 0; i < 4; ++i) {
    double bound = std::max(1.0, std::abs(z[i]));
    double limit = 1e-10 * bound * bound * bound * bound;
    if (std::abs(horner(a, z[i])) > limit) {
      throw numerical_error("quartic root iteration failed to converge");
    }
  }
  return z;
}

}  // namespace zenolab
