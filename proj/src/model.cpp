#include "zenolab/model.hpp"

#include <cmath>
#include <cstdlib>

namespace zenolab {

ValidationReport validate(const PhysicalConfig& config) {
    ValidationReport report;
    if (!(config.m > 0.0) || !std::isfinite(config.m))
        report.violations.push_back("m must be positive");
    if (!(config.a > 0.0) || !std::isfinite(config.a))
        report.violations.push_back("a must be positive");
    if (!(config.b > config.a) || !std::isfinite(config.b))
        report.violations.push_back("b must exceed a");
    if (!(config.v0 > 0.0) || !std::isfinite(config.v0))
        report.violations.push_back("V0 must be positive");
    return report;
}

ModelParams to_dimensionless(const PhysicalConfig& config) {
    auto report = validate(config);
    if (!report.valid()) {
        std::string msg = "invalid configuration:";
        for (const auto& v : report.violations) msg += " " + v + ";";
        throw invalid_config_error(msg);
    }
    ModelParams p;
    p.u = 2.0 * config.m * config.a * config.a * config.v0;
    p.w = (config.b - config.a) / config.a;
    p.time_scale = 2.0 * config.m * config.a * config.a;
    return p;
}

PhysicalConfig from_dimensionless(const ModelParams& params, double m, double a) {
    PhysicalConfig c;
    c.m = m;
    c.a = a;
    c.b = a * (1.0 + params.w);
    c.v0 = params.u / (2.0 * m * a * a);
    return c;
}

Tolerances Tolerances::from_env() {
    Tolerances t;
    const char* profile = std::getenv("ZENOLAB_TOLERANCE_PROFILE");
    if (profile == nullptr || std::string(profile) == "default") return t;
    if (std::string(profile) == "strict") {
        t.profile = "strict";
        t.quadrature_abs = 1e-12;
        t.level_residual = 1e-14;
        return t;
    }
    throw invalid_config_error("ZENOLAB_TOLERANCE_PROFILE must be 'default' or 'strict', got '" +
                               std::string(profile) + "'");
}

}  // namespace zenolab
