#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zenolab/levels.hpp"
#include "zenolab/matching.hpp"
#include "zenolab/model.hpp"
#include "zenolab/poles.hpp"
#include "zenolab/quadrature.hpp"
#include "zenolab/spectral.hpp"
#include "zenolab/survival.hpp"
#include "zenolab/version.hpp"
#include "zenolab/zeno.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace zenolab;

struct OutputTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  ordered_json extra;  // subcommand-specific metadata
  std::vector<std::string> warnings;
};

std::string format_cell(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const OutputTable& table, const std::string& subcommand,
          const PhysicalConfig& cfg, const ModelParams& params,
          const Tolerances& tol, const std::string& format,
          const std::string& out_path) {
  std::ostringstream body;
  if (format == "csv") {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      if (i) body << ',';
      body << table.columns[i];
    }
    body << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) body << ',';
        body << format_cell(row[i]);
      }
      body << '\n';
    }
  } else {
    ordered_json doc;
    ordered_json meta;
    meta["version"] = version_string;
    meta["subcommand"] = subcommand;
    meta["config"] = {{"m", cfg.m},
                      {"a", cfg.a},
                      {"b", cfg.b},
                      {"v0", cfg.v0},
                      {"u", params.u},
                      {"w", params.w},
                      {"time_scale", params.time_scale}};
    meta["tolerances"] = {{"profile", tol.profile},
                          {"quadrature_abs", tol.quadrature_abs},
                          {"level_residual", tol.level_residual}};
    for (auto& item : table.extra.items()) meta[item.key()] = item.value();
    meta["warnings"] = table.warnings;
    doc["meta"] = meta;
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    body << doc.dump(2) << '\n';
  }

  for (const auto& w : table.warnings) std::cerr << "warning: " << w << '\n';

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw invalid_config_error("cannot open output file " + out_path);
    out << body.str();
  }
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) /
                     static_cast<double>(n - 1);
  }
  return xs;
}

struct LevelAnalysis {
  QuasiLevel lv;
  SpectralShape shape;
  PoleSet ps;
  SurvivalParams sp;
};

LevelAnalysis analyze_level(const ModelParams& params, const QuasiLevel& lv,
                            bool include_shallow) {
  LevelAnalysis out;
  out.lv = lv;
  out.shape = shape_constants(params, lv, include_shallow);
  auto taylor = taylor_expand(params, lv, 4, include_shallow);
  out.ps = pole4(taylor, lv);
  out.sp = survival_params(out.ps, out.shape, lv);
  return out;
}

// level_flag > 0 selects that index (errors propagate); 0 means every level,
// skipping the ones that cannot be analyzed and noting why.
std::vector<LevelAnalysis> analyze_selection(
    const ModelParams& params, const std::vector<QuasiLevel>& levels,
    int level_flag, bool include_shallow, std::vector<std::string>* warnings) {
  std::vector<LevelAnalysis> out;
  if (level_flag > 0) {
    for (const auto& lv : levels) {
      if (lv.index == level_flag) {
        out.push_back(analyze_level(params, lv, include_shallow));
        return out;
      }
    }
    throw invalid_config_error("level index out of range");
  }
  for (const auto& lv : levels) {
    if (lv.shallow && !include_shallow) {
      char buf[120];
      std::snprintf(buf, sizeof buf,
                    "level %d is shallow (arho0 = %.6g); skipped", lv.index,
                    lv.arho0);
      warnings->emplace_back(buf);
      continue;
    }
    try {
      out.push_back(analyze_level(params, lv, include_shallow));
    } catch (const numerical_error& err) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "level %d: %s; skipped", lv.index,
                    err.what());
      warnings->emplace_back(buf);
    }
  }
  return out;
}

const QuasiLevel& require_level(const std::vector<QuasiLevel>& levels,
                                int index) {
  for (const auto& lv : levels) {
    if (lv.index == index) return lv;
  }
  throw invalid_config_error("level index out of range");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "zenolab: quasi-stationary levels, spectral poles, survival laws and "
      "Zeno crossover analysis for a spherical well behind a finite barrier"};
  app.require_subcommand(1);

  double m = 1.0, a = 1.0, b = 2.0, v0 = 10.0;
  std::string config_path, format = "csv", out_path;
  bool include_shallow = false;
  auto* opt_m = app.add_option("--m", m, "particle mass (hbar = 1)");
  auto* opt_a = app.add_option("--a", a, "inner well radius");
  auto* opt_b = app.add_option("--b", b, "outer barrier radius");
  auto* opt_v0 = app.add_option("--v0", v0, "barrier height");
  app.add_option("--config", config_path,
                 "flat JSON file with m, a, b, v0; explicit flags override");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "output path (default: stdout)");
  app.add_flag("--include-shallow", include_shallow,
               "process shallow levels too (peaked approximation dubious)");

  int level = 0;
  int samples = 0;
  double t_max = -1.0;
  std::string method = "closed";
  std::string sweep_param;
  double sweep_from = 0.0, sweep_to = 0.0;
  int sweep_steps = 11;

  auto* cmd_levels =
      app.add_subcommand("levels", "list the quasi-stationary levels");
  auto* cmd_spectrum = app.add_subcommand(
      "spectrum", "sample the energy density around one level's peak");
  cmd_spectrum->add_option("--level", level, "level index (default 1)");
  cmd_spectrum->add_option("--samples", samples, "grid size (default 401)");
  auto* cmd_poles =
      app.add_subcommand("poles", "pole pairs and survival-law parameters");
  cmd_poles->add_option("--level", level, "level index (default: all)");
  auto* cmd_survival = app.add_subcommand(
      "survival", "survival probability on a uniform time grid");
  cmd_survival->add_option("--level", level, "level index (default 1)");
  cmd_survival->add_option("--t-max", t_max,
                           "grid end, t-tilde units (default 3*tau1)");
  cmd_survival->add_option("--samples", samples,
                           "number of grid points (default 200)");
  cmd_survival->add_option(
      "--method", method,
      "columns: p2 | p4 | p4_approx | oracle | closed | all");
  auto* cmd_crossover = app.add_subcommand(
      "crossover", "single-exponential re-crossing analysis");
  cmd_crossover->add_option("--level", level, "level index (default: all)");
  auto* cmd_sweep =
      app.add_subcommand("sweep", "broad-pole lifetime across a parameter");
  cmd_sweep->add_option("--level", level, "level index tracked (default 1)");
  cmd_sweep
      ->add_option("--sweep-param", sweep_param, "what to sweep: w or v0")
      ->required()
      ->check(CLI::IsMember({"w", "v0"}));
  cmd_sweep->add_option("--sweep-from", sweep_from, "first value")->required();
  cmd_sweep->add_option("--sweep-to", sweep_to, "last value")->required();
  cmd_sweep->add_option("--sweep-steps", sweep_steps,
                        "number of points (default 11)");
  auto* cmd_report = app.add_subcommand(
      "report", "per-level poles, lifetimes and crossover summary");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error(config): " << e.what() << '\n';
    return 2;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        throw invalid_config_error("cannot read config file " + config_path);
      }
      nlohmann::json file_cfg;
      try {
        in >> file_cfg;
      } catch (const nlohmann::json::exception& err) {
        throw invalid_config_error(std::string("config file: ") + err.what());
      }
      if (!file_cfg.is_object()) {
        throw invalid_config_error("config file must be a flat JSON object");
      }
      auto pick = [&file_cfg](const char* key, const CLI::Option* opt,
                              double* slot) {
        if (opt->count() == 0 && file_cfg.contains(key)) {
          if (!file_cfg[key].is_number()) {
            throw invalid_config_error(std::string("config file field ") +
                                       key + " must be a number");
          }
          *slot = file_cfg[key].get<double>();
        }
      };
      pick("m", opt_m, &m);
      pick("a", opt_a, &a);
      pick("b", opt_b, &b);
      pick("v0", opt_v0, &v0);
    }

    PhysicalConfig cfg{m, a, b, v0};
    auto report = validate(cfg);
    if (!report.valid()) {
      for (const auto& v : report.violations) {
        std::cerr << "error(config): " << v << '\n';
      }
      return 2;
    }
    ModelParams params = to_dimensionless(cfg);
    Tolerances tol = Tolerances::from_env();
    auto levels = find_levels(params, tol);
    if (levels.empty()) {
      throw no_levels_error("no quasi-stationary levels for this configuration");
    }

    OutputTable table;
    std::string subname = app.get_subcommands().front()->get_name();

    if (cmd_levels->parsed()) {
      table.columns = {"index", "sigma0", "e0_over_v0", "arho0", "shallow"};
      for (const auto& lv : levels) {
        table.rows.push_back({static_cast<double>(lv.index), lv.sigma0,
                              lv.e0_over_v0, lv.arho0,
                              lv.shallow ? 1.0 : 0.0});
      }
    } else if (cmd_spectrum->parsed()) {
      if (level == 0) level = 1;
      if (samples == 0) samples = 401;
      if (samples < 2) throw invalid_config_error("samples must be >= 2");
      const auto& lv = require_level(levels, level);
      auto shape = shape_constants(params, lv, include_shallow);
      double su = std::sqrt(params.u);
      double smin = 1e-6 * su, smax = su * (1.0 - 1e-9);
      double lo = std::max(smin, shape.sigma0 - 50.0 * shape.gamma);
      double hi = std::min(smax, shape.sigma0 + 50.0 * shape.gamma);
      table.columns = {"sigma", "f", "weight"};
      for (double s : linspace(lo, hi, samples)) {
        double f = spectral_denominator(params, s);
        table.rows.push_back({s, f, spectral_weight(params, lv, s)});
      }
      table.extra["level"] = level;
      table.extra["shape"] = {{"sigma0", shape.sigma0},
                              {"K", shape.K},
                              {"epsilon", shape.epsilon},
                              {"gamma", shape.gamma}};
    } else if (cmd_poles->parsed()) {
      auto analyses = analyze_selection(params, levels, level, include_shallow,
                                        &table.warnings);
      if (analyses.empty()) {
        throw numerical_error("no level produced a valid pole set");
      }
      table.columns = {"level",      "sigma0",     "x0",
                       "y0",         "x1",         "y1",
                       "x2",         "y2",         "residual1",
                       "residual2",  "alpha",      "beta",
                       "n_factor",   "tau1_tilde", "tau1",
                       "tau2_tilde", "tau2",       "tau0_exact_tilde",
                       "tau0_approx_tilde"};
      for (const auto& an : analyses) {
        Pole z0 = pole2(an.shape, an.lv);
        for (const auto& w : an.sp.warnings) table.warnings.push_back(w);
        table.rows.push_back({static_cast<double>(an.lv.index), an.lv.sigma0,
                              z0.x, z0.y, an.sp.x1, an.sp.y1, an.sp.x2,
                              an.sp.y2, an.ps.residual1, an.ps.residual2,
                              an.sp.alpha, an.sp.beta, an.sp.n_factor,
                              an.sp.tau1_tilde,
                              an.sp.tau1_tilde * params.time_scale,
                              an.sp.tau2_tilde,
                              an.sp.tau2_tilde * params.time_scale,
                              an.sp.tau0_exact, an.sp.tau0_approx});
      }
      table.extra["level"] = level;
    } else if (cmd_survival->parsed()) {
      if (level == 0) level = 1;
      if (samples == 0) samples = 200;
      if (samples < 2) throw invalid_config_error("samples must be >= 2");
      if (method != "p2" && method != "p4" && method != "p4_approx" &&
          method != "oracle" && method != "closed" && method != "all") {
        throw invalid_config_error("unknown survival method " + method);
      }
      const auto& lv = require_level(levels, level);
      auto an = analyze_level(params, lv, include_shallow);
      for (const auto& w : an.sp.warnings) table.warnings.push_back(w);
      if (t_max < 0.0) t_max = 3.0 * an.sp.tau1_tilde;
      if (!(t_max > 0.0)) {
        throw invalid_config_error("t-max must be positive");
      }
      bool want_p2 = method == "p2" || method == "closed" || method == "all";
      bool want_p4 = method == "p4" || method == "closed" || method == "all";
      bool want_p4a =
          method == "p4_approx" || method == "closed" || method == "all";
      bool want_oracle = method == "oracle" || method == "all";
      table.columns = {"t_tilde", "t"};
      if (want_p2) table.columns.push_back("p2");
      if (want_p4) table.columns.push_back("p4");
      if (want_p4a) table.columns.push_back("p4_approx");
      if (method == "oracle") table.columns.push_back("p_oracle_raw");
      if (want_oracle) table.columns.push_back("p_oracle_renormalized");
      auto opts = QuadratureOptions::from_tolerances(tol);
      for (double tt : linspace(0.0, t_max, samples)) {
        std::vector<double> row{tt, tt * params.time_scale};
        if (want_p2) row.push_back(p2(tt, an.ps.z1));
        if (want_p4) row.push_back(p4(tt, an.sp));
        if (want_p4a) row.push_back(p4_approx(tt, an.sp));
        if (want_oracle) {
          auto oracle = p_oracle(tt, params, lv, opts);
          if (method == "oracle") row.push_back(oracle.raw);
          row.push_back(oracle.renormalized);
        }
        table.rows.push_back(row);
      }
      table.extra["level"] = level;
      table.extra["t_max_tilde"] = t_max;
      table.extra["samples"] = samples;
      table.extra["method"] = method;
    } else if (cmd_crossover->parsed()) {
      auto analyses = analyze_selection(params, levels, level, include_shallow,
                                        &table.warnings);
      if (analyses.empty()) {
        throw numerical_error("no level produced a valid pole set");
      }
      table.columns = {"level", "exists",       "lhs",
                       "rhs",   "t_star_tilde", "t_star",
                       "phi_residual"};
      for (const auto& an : analyses) {
        auto cr = crossover(an.sp);
        table.rows.push_back({static_cast<double>(an.lv.index),
                              cr.exists ? 1.0 : 0.0, cr.lhs, cr.rhs,
                              cr.t_star_tilde,
                              cr.t_star_tilde * params.time_scale,
                              cr.phi_residual});
      }
      table.extra["level"] = level;
    } else if (cmd_sweep->parsed()) {
      if (level == 0) level = 1;
      if (sweep_steps < 2) {
        throw invalid_config_error("sweep-steps must be >= 2");
      }
      if (!(sweep_from > 0.0) || !(sweep_to > sweep_from)) {
        throw invalid_config_error(
            "sweep range must satisfy 0 < sweep-from < sweep-to");
      }
      auto values = linspace(sweep_from, sweep_to, sweep_steps);
      SweepResult sr;
      if (sweep_param == "w") {
        sr = sweep_tau2_vs_w(params, level, values, include_shallow);
        table.columns.push_back("w");
      } else {
        for (auto& v : values) v *= params.time_scale;  // v0 -> u
        sr = sweep_tau2_vs_gap(params, level, values, include_shallow);
        table.columns.push_back("inv_arho0");
      }
      for (const auto& w : sr.warnings) table.warnings.push_back(w);
      for (const char* c :
           {"level", "sigma0", "arho0", "x1", "y1", "x2", "y2", "tau1_tilde",
            "tau1", "tau2_tilde", "tau2", "tau2_pheno"}) {
        table.columns.push_back(c);
      }
      for (const auto& row : sr.rows) {
        table.rows.push_back({row.param, static_cast<double>(row.level_index),
                              row.sigma0, row.arho0, row.x1, row.y1, row.x2,
                              row.y2, row.tau1_tilde, row.tau1,
                              row.tau2_tilde, row.tau2, row.tau2_pheno});
      }
      table.extra["sweep_param"] = sweep_param;
      table.extra["sweep_from"] = sweep_from;
      table.extra["sweep_to"] = sweep_to;
      table.extra["sweep_steps"] = sweep_steps;
      table.extra["level"] = level;
      table.extra["fit"] = {{"slope", sr.fit.slope},
                            {"intercept", sr.fit.intercept},
                            {"r2", sr.fit.r2}};
    } else if (cmd_report->parsed()) {
      auto analyses = analyze_selection(params, levels, 0, include_shallow,
                                        &table.warnings);
      if (analyses.empty()) {
        throw numerical_error("no level produced a valid pole set");
      }
      table.columns = {
          "level",      "sigma0",         "arho0",      "e0_over_v0",
          "gamma",      "x1",             "y1",         "x2",
          "y2",         "tau1_tilde",     "tau1",       "tau2_tilde",
          "tau2",       "tau2_pheno",     "tau_zeno_tilde", "tau_zeno",
          "crossover_exists", "t_star_tilde", "t_star"};
      for (const auto& an : analyses) {
        for (const auto& w : an.sp.warnings) table.warnings.push_back(w);
        auto stc = short_time_coefficients(an.sp);
        auto cr = crossover(an.sp);
        table.rows.push_back(
            {static_cast<double>(an.lv.index), an.lv.sigma0, an.lv.arho0,
             an.lv.e0_over_v0, an.shape.gamma, an.sp.x1, an.sp.y1, an.sp.x2,
             an.sp.y2, an.sp.tau1_tilde,
             an.sp.tau1_tilde * params.time_scale, an.sp.tau2_tilde,
             an.sp.tau2_tilde * params.time_scale,
             tau2_phenomenological(params, an.lv), stc.tau_zeno_tilde,
             stc.tau_zeno_tilde * params.time_scale,
             cr.exists ? 1.0 : 0.0, cr.t_star_tilde,
             cr.t_star_tilde * params.time_scale});
      }
    }

    emit(table, subname, cfg, params, tol, format, out_path);
    return 0;
  } catch (const invalid_config_error& err) {
    std::cerr << "error(config): " << err.what() << '\n';
    return 2;
  } catch (const no_levels_error& err) {
    std::cerr << "error(levels): " << err.what() << '\n';
    return 3;
  } catch (const numerical_error& err) {
    std::cerr << "error(numerical): " << err.what() << '\n';
    return 4;
  } catch (const std::exception& err) {
    std::cerr << "error(numerical): " << err.what() << '\n';
    return 4;
  }
}
