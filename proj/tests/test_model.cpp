#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include "zenolab/model.hpp"

using namespace zenolab;

namespace {

bool mentions(const ValidationReport& rep, const std::string& needle) {
  for (const auto& v : rep.violations)
    if (v.find(needle) != std::string::npos) return true;
  return false;
}

// RAII guard so a failing CHECK cannot leak the env override into other suites.
struct EnvGuard {
  std::string name;
  std::string old;
  bool had = false;
  EnvGuard(const char* n, const char* value) : name(n) {
    if (const char* p = std::getenv(n)) {
      had = true;
      old = p;
    }
    setenv(n, value, 1);
  }
  ~EnvGuard() {
    if (had)
      setenv(name.c_str(), old.c_str(), 1);
    else
      unsetenv(name.c_str());
  }
};

}  // namespace

TEST_SUITE("model") {

TEST_CASE("default config is valid") {
  PhysicalConfig cfg;
  CHECK(validate(cfg).valid());
}

TEST_CASE("validation reports every violated constraint") {
  PhysicalConfig cfg;
  cfg.m = -1.0;
  cfg.a = 0.0;
  cfg.b = -2.0;
  cfg.v0 = 0.0;
  auto rep = validate(cfg);
  CHECK_FALSE(rep.valid());
  CHECK(mentions(rep, "m"));
  CHECK(mentions(rep, "a"));
  CHECK(mentions(rep, "b"));
  CHECK(mentions(rep, "V0"));
  CHECK(rep.violations.size() >= 4);
}

TEST_CASE("b must exceed a") {
  PhysicalConfig cfg;
  cfg.a = 2.0;
  cfg.b = 2.0;
  auto rep = validate(cfg);
  CHECK_FALSE(rep.valid());
  CHECK(mentions(rep, "b"));
}

TEST_CASE("non-finite values are rejected") {
  PhysicalConfig cfg;
  cfg.v0 = std::nan("");
  CHECK_FALSE(validate(cfg).valid());
  cfg = PhysicalConfig{};
  cfg.m = std::numeric_limits<double>::infinity();
  CHECK_FALSE(validate(cfg).valid());
}

TEST_CASE("dimensionless map: u = 2 m a^2 V0, w = (b-a)/a") {
  PhysicalConfig cfg;
  cfg.m = 0.5;
  cfg.a = 1.0;
  cfg.b = 2.0;
  cfg.v0 = 88.8264396098042;  // (3 pi)^2
  auto p = to_dimensionless(cfg);
  CHECK(p.u == doctest::Approx(88.8264396098042).epsilon(1e-15));
  CHECK(p.w == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.time_scale == doctest::Approx(1.0).epsilon(1e-15));

  cfg.m = 2.0;
  cfg.a = 3.0;
  cfg.b = 4.5;
  cfg.v0 = 1.0;
  p = to_dimensionless(cfg);
  CHECK(p.u == doctest::Approx(36.0).epsilon(1e-15));
  CHECK(p.w == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p.time_scale == doctest::Approx(36.0).epsilon(1e-15));
}

TEST_CASE("to_dimensionless throws on invalid config") {
  PhysicalConfig cfg;
  cfg.m = 0.0;
  CHECK_THROWS_AS(to_dimensionless(cfg), invalid_config_error);
}

TEST_CASE("round trip physical -> dimensionless -> physical") {
  PhysicalConfig cfg;
  cfg.m = 0.75;
  cfg.a = 1.3;
  cfg.b = 3.1;
  cfg.v0 = 17.25;
  auto p = to_dimensionless(cfg);
  auto back = from_dimensionless(p, cfg.m, cfg.a);
  CHECK(back.b == doctest::Approx(cfg.b).epsilon(1e-14));
  CHECK(back.v0 == doctest::Approx(cfg.v0).epsilon(1e-14));
  CHECK(back.m == cfg.m);
  CHECK(back.a == cfg.a);
}

TEST_CASE("tolerance profiles") {
  {
    EnvGuard guard("ZENOLAB_TOLERANCE_PROFILE", "default");
    auto tol = Tolerances::from_env();
    CHECK(tol.profile == "default");
    CHECK(tol.quadrature_abs == doctest::Approx(1e-10).epsilon(1e-15));
    CHECK(tol.level_residual == doctest::Approx(1e-12).epsilon(1e-15));
  }
  {
    EnvGuard guard("ZENOLAB_TOLERANCE_PROFILE", "strict");
    auto tol = Tolerances::from_env();
    CHECK(tol.profile == "strict");
    CHECK(tol.quadrature_abs == doctest::Approx(1e-12).epsilon(1e-15));
    CHECK(tol.level_residual == doctest::Approx(1e-14).epsilon(1e-15));
  }
  {
    EnvGuard guard("ZENOLAB_TOLERANCE_PROFILE", "no-such-profile");
    CHECK_THROWS_AS(Tolerances::from_env(), invalid_config_error);
  }
}

}  // TEST_SUITE
