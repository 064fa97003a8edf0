#include <doctest.h>

#include <cmath>
#include <vector>

#include "zenolab/levels.hpp"

using namespace zenolab;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

ModelParams params_u(double u, double w = 1.0) {
  ModelParams p;
  p.u = u;
  p.w = w;
  p.time_scale = 1.0;
  return p;
}

// Independent root finder: dense sign scan plus bisection, no Newton, no
// bracket theory. Slow but hard to get wrong.
std::vector<double> brute_roots(double u, int grid = 200000) {
  std::vector<double> roots;
  double su = std::sqrt(u);
  double lo = 1e-9, hi = su * (1.0 - 1e-12);
  double prev_x = lo, prev_f = level_equation(u, lo);
  for (int i = 1; i <= grid; ++i) {
    double x = lo + (hi - lo) * double(i) / grid;
    double f = level_equation(u, x);
    if ((prev_f <= 0.0) != (f <= 0.0)) {
      double a = prev_x, b = x, fa = prev_f;
      for (int it = 0; it < 200; ++it) {
        double m = 0.5 * (a + b);
        double fm = level_equation(u, m);
        if ((fa <= 0.0) == (fm <= 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
        if (b - a < 1e-14 * b) break;
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_f = f;
  }
  return roots;
}

double simpson(const std::vector<double>& f, double h) {
  double s = f.front() + f.back();
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += (i % 2 ? 4.0 : 2.0) * f[i];
  return s * h / 3.0;
}

}  // namespace

TEST_SUITE("levels") {

TEST_CASE("sqrt(u) = N pi yields exactly N levels") {
  for (int n = 1; n <= 5; ++n) {
    double su = n * kPi;
    auto levels = find_levels(params_u(su * su));
    CHECK(int(levels.size()) == n);
  }
}

TEST_CASE("no levels below the first bracket") {
  CHECK(find_levels(params_u(2.0)).empty());
  CHECK_FALSE(find_levels(params_u(2.9)).empty());
}

TEST_CASE("roots agree with a dense sign-scan oracle") {
  for (double u : {9.5, 36.0, 73.3, 9.0 * kPi * kPi}) {
    auto oracle = brute_roots(u);
    auto levels = find_levels(params_u(u));
    REQUIRE(levels.size() == oracle.size());
    for (std::size_t i = 0; i < levels.size(); ++i)
      CHECK(levels[i].sigma0 == doctest::Approx(oracle[i]).epsilon(1e-9));
  }
}

TEST_CASE("pinned roots for the three reference depths") {
  auto l2 = find_levels(params_u(4.0 * kPi * kPi));
  REQUIRE(l2.size() == 2);
  CHECK(l2[0].sigma0 == doctest::Approx(2.697800).epsilon(1e-6));
  CHECK(l2[1].sigma0 == doctest::Approx(5.284080).epsilon(1e-6));

  auto l3 = find_levels(params_u(9.0 * kPi * kPi));
  REQUIRE(l3.size() == 3);
  CHECK(l3[0].sigma0 == doctest::Approx(2.8359523267115829).epsilon(1e-12));
  CHECK(l3[1].sigma0 == doctest::Approx(5.6414610103728524).epsilon(1e-12));
  CHECK(l3[2].sigma0 == doctest::Approx(8.3387745764121703).epsilon(1e-12));

  auto l4 = find_levels(params_u(16.0 * kPi * kPi));
  REQUIRE(l4.size() == 4);
  CHECK(l4[0].sigma0 == doctest::Approx(2.908060).epsilon(1e-6));
  CHECK(l4[1].sigma0 == doctest::Approx(5.803161).epsilon(1e-6));
  CHECK(l4[2].sigma0 == doctest::Approx(8.664032).epsilon(1e-6));
  CHECK(l4[3].sigma0 == doctest::Approx(11.425065).epsilon(1e-6));
}

TEST_CASE("brackets, residuals, derived fields") {
  double u = 9.0 * kPi * kPi;
  auto levels = find_levels(params_u(u));
  double su = std::sqrt(u);
  for (const auto& lv : levels) {
    int n = lv.index;
    CHECK(lv.sigma0 > (2 * n - 1) * kPi / 2.0);
    CHECK(lv.sigma0 < std::min(n * kPi, su));
    CHECK(std::abs(level_equation(u, lv.sigma0)) < 1e-12);
    CHECK(lv.arho0 * lv.arho0 + lv.sigma0 * lv.sigma0 ==
          doctest::Approx(u).epsilon(1e-14));
    CHECK(lv.e0_over_v0 ==
          doctest::Approx(lv.sigma0 * lv.sigma0 / u).epsilon(1e-15));
    CHECK(lv.c1_sq ==
          doctest::Approx(2.0 * lv.arho0 / (1.0 + lv.arho0)).epsilon(1e-15));
    CHECK(level_norm(lv) == doctest::Approx(lv.c1_sq).epsilon(1e-15));
    CHECK(lv.ak0() == lv.sigma0);
    CHECK_FALSE(lv.shallow);
  }
}

TEST_CASE("level close to the barrier top is flagged shallow") {
  auto levels = find_levels(params_u(2.9));
  REQUIRE(levels.size() == 1);
  CHECK(levels[0].shallow);
  CHECK(levels[0].arho0 < 0.5);
  CHECK(levels[0].sigma0 > 1.69);
  CHECK(levels[0].sigma0 < 1.70);
}

TEST_CASE("strict tolerance profile is satisfiable") {
  Tolerances strict;
  strict.profile = "strict";
  strict.level_residual = 1e-14;
  auto levels = find_levels(params_u(9.0 * kPi * kPi), strict);
  CHECK(levels.size() == 3);
}

TEST_CASE("bound state: continuity at the well edge") {
  auto levels = find_levels(params_u(4.0 * kPi * kPi));
  for (const auto& lv : levels) {
    double inner = bound_wavefunction_at(lv, 1.0);
    double outer = bound_wavefunction_at(lv, 1.0 + 1e-13);
    CHECK(outer == doctest::Approx(inner).epsilon(1e-10));
    // slope check by one-sided differences; matching holds because
    // sigma0 solves the level equation
    double h = 1e-7;
    double dl = (inner - bound_wavefunction_at(lv, 1.0 - h)) / h;
    double dr = (bound_wavefunction_at(lv, 1.0 + h) - outer) / h;
    CHECK(dr == doctest::Approx(dl).epsilon(1e-5));
  }
}

TEST_CASE("bound state: unit norm") {
  auto levels = find_levels(params_u(9.0 * kPi * kPi));
  for (const auto& lv : levels) {
    double X = 1.0 + 8.0 / lv.arho0;
    int n = 4000;  // even
    std::vector<double> f(n + 1);
    double h = X / n;
    for (int i = 0; i <= n; ++i) {
      double v = bound_wavefunction_at(lv, i * h);
      f[i] = v * v;
    }
    double head = simpson(f, h);
    double vX = bound_wavefunction_at(lv, X);
    double tail = vX * vX / (2.0 * lv.arho0);
    CHECK(head + tail == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("bound state: interior slope fixes the amplitude convention") {
  auto levels = find_levels(params_u(9.0 * kPi * kPi));
  const auto& lv = levels[0];
  double x = 1e-6;
  CHECK(bound_wavefunction_at(lv, x) / x ==
        doctest::Approx(std::sqrt(lv.c1_sq) * lv.sigma0).epsilon(1e-10));
  CHECK(bound_wavefunction_at(lv, 0.0) == 0.0);
}

}  // TEST_SUITE
