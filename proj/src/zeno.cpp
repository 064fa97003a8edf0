#include "zenolab/zeno.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace zenolab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string format_warning(const char* fmt, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

const QuasiLevel* nearest_level(const std::vector<QuasiLevel>& levels,
                                double sigma_target) {
  const QuasiLevel* best = nullptr;
  for (const auto& lv : levels) {
    if (!best ||
        std::abs(lv.sigma0 - sigma_target) < std::abs(best->sigma0 - sigma_target)) {
      best = &lv;
    }
  }
  return best;
}

// Shared driver: the two sweeps differ only in which knob moves and which
// abscissa the row reports.
struct SweepPoint {
  ModelParams params;
  double sweep_value;  // raw knob value, for warnings
};

SweepResult run_sweep(const std::vector<SweepPoint>& points, int level_index,
                      bool include_shallow, bool param_is_w) {
  SweepResult out;
  double prev_sigma = -1.0;
  bool have_prev = false;
  Pole prev_z1, prev_z2;
  bool have_prev_poles = false;

  for (const auto& pt : points) {
    auto levels = find_levels(pt.params);
    if (levels.empty()) {
      out.warnings.push_back(format_warning(
          "sweep value %.6g: no levels; skipped", pt.sweep_value, 0.0));
      have_prev = false;
      continue;
    }
    const QuasiLevel* lv = nullptr;
    if (have_prev) {
      lv = nearest_level(levels, prev_sigma);
    } else {
      for (const auto& cand : levels) {
        if (cand.index == level_index) lv = &cand;
      }
      if (!lv) {
        out.warnings.push_back(format_warning(
            "sweep value %.6g: level index absent; skipped", pt.sweep_value,
            0.0));
        continue;
      }
    }
    prev_sigma = lv->sigma0;
    have_prev = true;

    if (lv->shallow && !include_shallow) {
      out.warnings.push_back(format_warning(
          "sweep value %.6g: level turned shallow (arho0 = %.6g); skipped",
          pt.sweep_value, lv->arho0));
      continue;
    }

    SweepRow row;
    try {
      auto shape = shape_constants(pt.params, *lv, include_shallow);
      auto taylor = taylor_expand(pt.params, *lv, 4, include_shallow);
      auto ps = pole4(taylor, *lv);
      if (have_prev_poles) {
        auto d = [](const Pole& a, const Pole& b) {
          return std::hypot(a.x - b.x, a.y - b.y);
        };
        if (d(ps.z1, prev_z2) < d(ps.z1, prev_z1)) {
          throw numerical_error(
              "pole classification swapped along the sweep");
        }
      }
      auto sp = survival_params(ps, shape, *lv);
      prev_z1 = ps.z1;
      prev_z2 = ps.z2;
      have_prev_poles = true;

      row.param = param_is_w ? pt.params.w : 1.0 / lv->arho0;
      row.level_index = lv->index;
      row.sigma0 = lv->sigma0;
      row.arho0 = lv->arho0;
      row.x1 = sp.x1;
      row.y1 = sp.y1;
      row.x2 = sp.x2;
      row.y2 = sp.y2;
      row.tau1_tilde = sp.tau1_tilde;
      row.tau2_tilde = sp.tau2_tilde;
      row.tau1 = sp.tau1_tilde * pt.params.time_scale;
      row.tau2 = sp.tau2_tilde * pt.params.time_scale;
      row.tau2_pheno = tau2_phenomenological(pt.params, *lv);
      for (auto& wmsg : sp.warnings) out.warnings.push_back(wmsg);
    } catch (const numerical_error& err) {
      std::string what = err.what();
      if (what.find("swapped") != std::string::npos) throw;
      out.warnings.push_back(format_warning("sweep value %.6g: ",
                                            pt.sweep_value, 0.0) +
                             what + "; skipped");
      continue;
    }
    out.rows.push_back(row);
  }

  if (out.rows.size() < points.size()) {
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "partial result: %zu of %zu sweep points usable",
                  out.rows.size(), points.size());
    out.warnings.emplace_back(buf);
  }
  std::sort(out.rows.begin(), out.rows.end(),
            [](const SweepRow& a, const SweepRow& b) {
              return a.param < b.param;
            });
  if (out.rows.size() >= 2) {
    std::vector<double> xs, ys;
    for (const auto& row : out.rows) {
      xs.push_back(row.param);
      ys.push_back(row.tau2_tilde);
    }
    out.fit = linear_fit(xs, ys);
  } else {
    out.warnings.emplace_back("too few sweep points for a fit");
  }
  return out;
}

}  // namespace

double phi(double t_tilde, const SurvivalParams& sp) {
  double ca = std::cos(sp.alpha);
  return std::exp(-4.0 * sp.x2 * sp.y2 * t_tilde) *
             std::cos(sp.alpha + 2.0 * sp.beta * t_tilde) -
         ca;
}

CrossoverResult crossover(const SurvivalParams& sp) {
  CrossoverResult res;
  double ca = std::cos(sp.alpha);
  double sa = std::sin(sp.alpha);
  double g2 = sp.x2 * sp.y2;
  res.lhs = 2.0 * g2;
  res.rhs = -sp.beta * std::tan(sp.alpha);
  res.exists = sa != 0.0 && ca * (2.0 * g2 * ca + sp.beta * sa) < 0.0;
  if (!res.exists) return res;

  double scale = 1.0 / (4.0 * g2);
  if (sp.beta != 0.0) {
    scale = std::min(scale, kPi / (2.0 * std::abs(sp.beta)));
  }
  const double t_min = 1e-9 * scale;
  const double step = scale / 64.0;
  const double t_abort = 100.0 / (4.0 * g2);

  double lo = t_min;
  double flo = phi(lo, sp);
  while (flo == 0.0 && lo < t_abort) {
    lo += step;
    flo = phi(lo, sp);
  }
  double hi = lo;
  bool bracketed = false;
  while (hi < t_abort) {
    hi = std::min(hi + step, t_abort);
    double fhi = phi(hi, sp);
    if ((flo < 0.0) != (fhi < 0.0)) {
      bracketed = true;
      break;
    }
    lo = hi;
    flo = fhi;
  }
  if (!bracketed) {
    throw numerical_error(
        "crossover criterion satisfied but no sign change within 100 "
        "envelope e-folds");
  }
  for (int i = 0; i < 200 && hi - lo > 2e-16 * hi; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = phi(mid, sp);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  res.t_star_tilde = 0.5 * (lo + hi);
  res.phi_residual = std::abs(phi(res.t_star_tilde, sp));
  return res;
}

LinearFit linear_fit(const std::vector<double>& xs,
                     const std::vector<double>& ys) {
  LinearFit fit;
  std::size_t n = xs.size();
  if (n < 2 || ys.size() != n) return fit;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = xs[i] - mx;
    double dy = ys[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) return fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

SweepResult sweep_tau2_vs_w(const ModelParams& base, int level_index,
                            const std::vector<double>& w_values,
                            bool include_shallow) {
  std::vector<double> ws = w_values;
  std::sort(ws.begin(), ws.end());
  std::vector<SweepPoint> points;
  for (double w : ws) {
    if (w <= 0.0) continue;
    points.push_back({ModelParams{base.u, w, base.time_scale}, w});
  }
  return run_sweep(points, level_index, include_shallow, true);
}

SweepResult sweep_tau2_vs_gap(const ModelParams& base, int level_index,
                              const std::vector<double>& u_values,
                              bool include_shallow) {
  std::vector<double> us = u_values;
  std::sort(us.begin(), us.end());
  std::vector<SweepPoint> points;
  for (double u : us) {
    if (u <= 0.0) continue;
    points.push_back({ModelParams{u, base.w, base.time_scale}, u});
  }
  return run_sweep(points, level_index, include_shallow, false);
}

double tau2_phenomenological(const ModelParams& params,
                             const QuasiLevel& level) {
  return params.time_scale * params.w / (2.0 * level.arho0);
}

}  // namespace zenolab
