#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "zenolab/quartic.hpp"

using namespace zenolab;

namespace {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

std::array<double, 5> from_pairs(double x1, double y1, double x2, double y2,
                                 double c4) {
  // (z^2 - 2 x1 z + x1^2 + y1^2)(z^2 - 2 x2 z + x2^2 + y2^2) * c4
  double p1 = x1 * x1 + y1 * y1, p2 = x2 * x2 + y2 * y2;
  std::array<double, 5> c{};
  c[4] = c4;
  c[3] = c4 * (-2.0 * (x1 + x2));
  c[2] = c4 * (p1 + p2 + 4.0 * x1 * x2);
  c[1] = c4 * (-2.0 * (x1 * p2 + x2 * p1));
  c[0] = c4 * (p1 * p2);
  return c;
}

std::array<cplx, 4> sorted_expected(std::vector<cplx> r) {
  std::sort(r.begin(), r.end(), [](cplx a, cplx b) {
    if (a.imag() != b.imag()) return a.imag() < b.imag();
    return a.real() < b.real();
  });
  return {r[0], r[1], r[2], r[3]};
}

long double residual(const std::array<double, 5>& c, cplx z) {
  lcplx zz(z.real(), z.imag());
  lcplx p = c[4];
  for (int k = 3; k >= 0; --k) p = p * zz + (long double)c[k];
  return std::abs(p);
}

// Independent check solver: plain Durand-Kerner in long double from the
// textbook (0.4 + 0.9i)^k start, no seeding tricks, no polish.
std::array<cplx, 4> oracle_roots(const std::array<double, 5>& c) {
  std::array<lcplx, 4> a;
  for (int k = 0; k < 4; ++k) a[k] = (long double)c[k] / (long double)c[4];
  long double radius = 1.0L;
  for (int k = 0; k < 4; ++k) radius = std::max(radius, std::abs(a[k]));
  lcplx base(0.4L, 0.9L);
  std::array<lcplx, 4> z;
  lcplx rot = base;
  for (int i = 0; i < 4; ++i) {
    z[i] = radius * rot;
    rot *= base;
  }
  auto eval = [&](lcplx x) {
    lcplx p = x + a[3];
    p = p * x + a[2];
    p = p * x + a[1];
    return p * x + a[0];
  };
  for (int sweep = 0; sweep < 500; ++sweep) {
    long double worst = 0.0L;
    for (int i = 0; i < 4; ++i) {
      lcplx den = 1.0L;
      for (int j = 0; j < 4; ++j)
        if (j != i) den *= z[i] - z[j];
      if (std::abs(den) < 1e-300L) continue;
      lcplx step = eval(z[i]) / den;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / (1.0L + std::abs(z[i])));
    }
    if (worst < 1e-18L) break;
  }
  std::vector<cplx> out;
  for (auto& v : z) out.push_back(cplx(double(v.real()), double(v.imag())));
  return sorted_expected(out);
}

void check_match(const std::array<cplx, 4>& got,
                 const std::array<cplx, 4>& expect, double tol) {
  for (int i = 0; i < 4; ++i) {
    double scale = std::max(1.0, std::abs(expect[i]));
    CHECK(std::abs(got[i] - expect[i]) < tol * scale);
  }
}

}  // namespace

TEST_SUITE("quartic") {

TEST_CASE("biquadratic with double roots at +-i") {
  std::array<double, 5> c{1.0, 0.0, 2.0, 0.0, 1.0};
  auto r = quartic_roots(c);
  CHECK(std::abs(r[0] - cplx(0, -1)) < 1e-8);
  CHECK(std::abs(r[1] - cplx(0, -1)) < 1e-8);
  CHECK(std::abs(r[2] - cplx(0, 1)) < 1e-8);
  CHECK(std::abs(r[3] - cplx(0, 1)) < 1e-8);
}

TEST_CASE("repeated complex pair off the axis") {
  // (z^2 - 2z + 5)^2: double roots at 1 +- 2i
  std::array<double, 5> c{25.0, -20.0, 14.0, -4.0, 1.0};
  auto r = quartic_roots(c);
  CHECK(std::abs(r[0] - cplx(1, -2)) < 1e-7);
  CHECK(std::abs(r[1] - cplx(1, -2)) < 1e-7);
  CHECK(std::abs(r[2] - cplx(1, 2)) < 1e-7);
  CHECK(std::abs(r[3] - cplx(1, 2)) < 1e-7);
}

TEST_CASE("constructed conjugate pairs are recovered") {
  // Tiny-y cases sit near the origin: shifting them out to x ~ 3 would bury
  // the pair width below coefficient rounding before the solver ever runs.
  struct Case {
    double x1, y1, x2, y2, c4;
  };
  for (const auto& t : {Case{2.7, 1e-3, 2.5, 0.4, 1.0},
                        Case{-1.3, 0.02, 1.9, 1.7, 3.0e4},
                        Case{0.0, 1.0, 0.0, 2.0, -2.0},
                        Case{0.02, 3.1e-5, -0.3, 0.9, 2.4e-3},
                        Case{1.0, 0.5, -1.0, 0.5, 1.0}}) {
    auto c = from_pairs(t.x1, t.y1, t.x2, t.y2, t.c4);
    auto r = quartic_roots(c);
    auto expect = sorted_expected({cplx(t.x1, t.y1), cplx(t.x1, -t.y1),
                                   cplx(t.x2, t.y2), cplx(t.x2, -t.y2)});
    check_match(r, expect, 1e-9);
  }
}

TEST_CASE("two-scale split: tiny pair next to a wide pair") {
  // The production shape after centering: a narrow pair with y ~ 4e-8 a small
  // offset from the origin, a wide pair at the same scale as the gap.
  auto c = from_pairs(0.006, 4.1e-8, 0.0, 0.35, 1.0);
  auto r = quartic_roots(c);
  CHECK(r[1].imag() == doctest::Approx(-4.1e-8).epsilon(1e-4));
  CHECK(r[2].imag() == doctest::Approx(4.1e-8).epsilon(1e-4));
  CHECK(r[2].real() == doctest::Approx(0.006).epsilon(1e-9));
  CHECK(r[0].imag() == doctest::Approx(-0.35).epsilon(1e-12));
  CHECK(r[3].imag() == doctest::Approx(0.35).epsilon(1e-12));
}

TEST_CASE("quadratic embedded at order two") {
  // (z^2 + M^2)(z^2 - 2 x z + x^2 + y^2), M = 1e3: the finite pair must come
  // out as if the quadratic were solved alone.
  double x = 1.25, y = 0.75, M = 1e3;
  auto c = from_pairs(0.0, M, x, y, 1.0);
  auto r = quartic_roots(c);
  CHECK(std::abs(r[1] - cplx(x, -y)) < 1e-8);
  CHECK(std::abs(r[2] - cplx(x, y)) < 1e-8);
  CHECK(std::abs(r[0] - cplx(0.0, -M)) < 1e-8 * M);
  CHECK(std::abs(r[3] - cplx(0.0, M)) < 1e-8 * M);
}

TEST_CASE("random quartics against an independent solver") {
  std::mt19937 rng(20240517u);
  std::uniform_real_distribution<double> ux(-3.0, 3.0);
  std::uniform_real_distribution<double> ulog(-1.3, 0.3);
  std::uniform_real_distribution<double> uc4(-2.0, 2.0);
  int done = 0;
  while (done < 40) {
    double x1 = ux(rng), x2 = ux(rng);
    double y1 = std::pow(10.0, ulog(rng)), y2 = std::pow(10.0, ulog(rng));
    // keep the four roots pairwise separated so both solvers see
    // well-conditioned simple roots; clustered cases are covered separately
    std::vector<cplx> roots{cplx(x1, y1), cplx(x1, -y1), cplx(x2, y2),
                            cplx(x2, -y2)};
    double min_d = 1e300;
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        min_d = std::min(min_d, std::abs(roots[i] - roots[j]));
    if (min_d < 0.1) continue;
    double c4 = uc4(rng);
    if (std::abs(c4) < 0.1) c4 = 0.5;
    auto c = from_pairs(x1, y1, x2, y2, c4);
    auto got = quartic_roots(c);
    auto expect = oracle_roots(c);
    check_match(got, expect, 1e-8);
    ++done;
  }
}

TEST_CASE("vieta relations and conjugate closure") {
  std::mt19937 rng(77u);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::array<double, 5> c{u(rng), u(rng), u(rng), u(rng), u(rng)};
    if (std::abs(c[4]) < 0.2) c[4] = 1.0;
    auto r = quartic_roots(c);

    cplx sum = r[0] + r[1] + r[2] + r[3];
    cplx prod = r[0] * r[1] * r[2] * r[3];
    CHECK(sum.real() == doctest::Approx(-c[3] / c[4]).epsilon(1e-8));
    CHECK(std::abs(sum.imag()) < 1e-10 * (1.0 + std::abs(sum)));
    CHECK(prod.real() == doctest::Approx(c[0] / c[4]).epsilon(1e-7));
    CHECK(std::abs(prod.imag()) < 1e-9 * (1.0 + std::abs(prod)));

    // closure: the multiset is its own conjugate
    for (int i = 0; i < 4; ++i) {
      double best = 1e300;
      for (int j = 0; j < 4; ++j)
        best = std::min(best, std::abs(r[i] - std::conj(r[j])));
      CHECK(best < 1e-12 * (1.0 + std::abs(r[i])));
    }
  }
}

TEST_CASE("residual bound holds for every returned root") {
  std::mt19937 rng(9001u);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::array<double, 5> c{u(rng), u(rng), u(rng), u(rng), u(rng)};
    if (std::abs(c[4]) < 0.2) c[4] = -1.0;
    auto r = quartic_roots(c);
    for (auto z : r) {
      double scale = std::max(1.0, std::abs(z));
      double cap = 1e-10 * std::abs(c[4]) * scale * scale * scale * scale;
      CHECK(double(residual(c, z)) <= cap);
    }
  }
}

TEST_CASE("roots arrive sorted by imaginary then real part") {
  auto c = from_pairs(1.0, 0.5, -2.0, 1.5, 2.0);
  auto r = quartic_roots(c);
  for (int i = 0; i + 1 < 4; ++i) {
    bool ordered = r[i].imag() < r[i + 1].imag() ||
                   (r[i].imag() == r[i + 1].imag() &&
                    r[i].real() <= r[i + 1].real());
    CHECK(ordered);
  }
}

TEST_CASE("degenerate leading coefficient is rejected") {
  std::array<double, 5> c{1.0, 2.0, 3.0, 4.0, 0.0};
  CHECK_THROWS_AS(quartic_roots(c), std::invalid_argument);
  c[4] = std::nan("");
  CHECK_THROWS_AS(quartic_roots(c), std::invalid_argument);
}

}  // TEST_SUITE
