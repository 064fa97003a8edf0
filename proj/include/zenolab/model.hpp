#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace zenolab {

// Exit-code-relevant failure classes. The CLI maps these to process status:
// invalid_config_error -> 2, no_levels_error -> 3, numerical_error -> 4.
struct invalid_config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct no_levels_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Physical parameters, natural units (hbar = 1).
struct PhysicalConfig {
    double m = 1.0;   // mass, > 0
    double a = 1.0;   // inner well radius, > 0
    double b = 2.0;   // outer barrier radius, > a
    double v0 = 10.0; // barrier height, > 0
};

// Dimensionless parameterization. All internal computation happens here;
// physical units reappear only at CLI boundaries.
struct ModelParams {
    double u = 0.0;          // 2 m a^2 V0
    double w = 0.0;          // (b - a) / a
    double time_scale = 0.0; // 2 m a^2, converts t = time_scale * t_tilde
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

ValidationReport validate(const PhysicalConfig& config);

// Throws invalid_config_error when validate() reports violations.
ModelParams to_dimensionless(const PhysicalConfig& config);

// Reconstructs (b, v0) given (m, a); round-trips to 1e-14 relative.
PhysicalConfig from_dimensionless(const ModelParams& params, double m, double a);

// Tolerance profile, switchable via ZENOLAB_TOLERANCE_PROFILE in {default, strict}.
struct Tolerances {
    std::string profile = "default";
    double quadrature_abs = 1e-10;
    double level_residual = 1e-12;

    static Tolerances from_env();
};

}  // namespace zenolab
