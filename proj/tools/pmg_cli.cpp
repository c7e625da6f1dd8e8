// pmg: command-line front end for the Poincare-Maxwell group library.

#include "pmg/casimir.hpp"
#include "pmg/checks.hpp"
#include "pmg/config.hpp"
#include "pmg/extended_phase.hpp"
#include "pmg/simulate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

pmg::CoalgebraPoint point_from(const std::vector<double>& v) {
  pmg::CoalgebraPoint xi;
  for (int i = 0; i < pmg::kDim; ++i) xi.coords[i] = v[static_cast<std::size_t>(i)];
  return xi;
}

int emit_report(const pmg::Report& r) {
  std::cout << pmg::format_report(r);
  return pmg::all_passed(r) ? 0 : 1;
}

pmg::RunConfig build_config(const std::string& path, const std::vector<std::string>& overrides) {
  pmg::RunConfig cfg = path.empty() ? pmg::RunConfig{} : pmg::load_config(path);
  pmg::apply_environment(cfg);
  for (const auto& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw pmg::ConfigError("--set expects key=value, got '" + kv + "'");
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  cfg.validate();
  return cfg;
}

int run_simulate(const pmg::RunConfig& cfg, pmg::SimMode mode, const std::string& out_prefix) {
  const pmg::SimulationResult res = pmg::run_simulation(cfg, mode);
  for (const auto& [suffix, content] : res.files) {
    const std::string path = out_prefix + suffix;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << content;
    std::cerr << "wrote " << path << '\n';
  }
  return emit_report(res.report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poincare-Maxwell group PM(2+1): algebra, coadjoint orbits and charged-particle dynamics"};
  app.require_subcommand(1);

  // algebra-check
  auto* alg = app.add_subcommand("algebra-check", "Run the Lie-algebra self-check suite");
  pmg::AlgebraCheckOptions alg_opts;
  int alg_samples = 0;
  bool corrupt = false;
  alg->add_option("--seed", alg_opts.seed, "RNG seed (PMG_SEED overrides the default)");
  alg->add_option("--samples", alg_samples, "Random samples per sweep (0 = defaults 200/500/1000)");
  alg->add_option("--c", alg_opts.c, "Speed of light")->check(CLI::PositiveNumber);
  alg->add_flag("--inject-corruption", corrupt, "Break one structure constant (negative control)");

  // casimir / classify
  std::vector<double> coords;
  double c = 1.0;
  double tol = pmg::kDefaultClassifyTol;
  auto* cas = app.add_subcommand("casimir", "Casimir invariants, orbit class and kernel residuals of a point");
  cas->add_option("coords", coords, "B Ex Ey H Px Py Kx Ky J")->expected(9)->required();
  cas->add_option("--c", c, "Speed of light")->check(CLI::PositiveNumber);
  cas->add_option("--tol", tol, "Zero tolerance for C0 and B")->check(CLI::PositiveNumber);
  auto* cls = app.add_subcommand("classify", "Orbit classification of a point");
  cls->add_option("coords", coords, "B Ex Ey H Px Py Kx Ky J")->expected(9)->required();
  cls->add_option("--c", c, "Speed of light")->check(CLI::PositiveNumber);
  cls->add_option("--tol", tol, "Zero tolerance for C0 and B")->check(CLI::PositiveNumber);

  // simulate / compare
  std::string config_path;
  std::vector<std::string> overrides;
  std::string mode = "lorentz";
  std::string out_prefix = "pmg_";
  auto* sim = app.add_subcommand("simulate", "Integrate Lorentz and/or orbit dynamics and write CSV");
  sim->add_option("--config", config_path, "key = value config file");
  sim->add_option("--set", overrides, "Override a config key (key=value), repeatable");
  sim->add_option("--mode", mode, "lorentz | orbit | compare");
  sim->add_option("--out", out_prefix, "Output path prefix");
  auto* cmp = app.add_subcommand("compare", "Equivalence check: simulate --mode compare");
  cmp->add_option("--config", config_path, "key = value config file");
  cmp->add_option("--set", overrides, "Override a config key (key=value), repeatable");
  cmp->add_option("--out", out_prefix, "Output path prefix");

  app.add_subcommand("defaults", "Print the default run configuration");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*alg) {
      if (const char* s = std::getenv("PMG_SEED"); s && alg->count("--seed") == 0) alg_opts.seed = std::stoull(s);
      if (alg_samples > 0) {
        alg_opts.exp_samples = alg_opts.coadjoint_samples = alg_opts.kernel_samples = alg_samples;
      }
      if (corrupt) alg_opts.constants = pmg::corrupted_constants();
      return emit_report(pmg::algebra_check(alg_opts));
    }
    if (*cas || *cls) {
      const pmg::CoalgebraPoint xi = point_from(coords);
      const pmg::OrbitClass oc = pmg::classify(xi, c, tol);
      if (*cas) {
        std::cout << "C0 " << pmg::format_double(oc.casimirs.c0) << '\n'
                  << "C1 " << pmg::format_double(oc.casimirs.c1) << '\n'
                  << "C2 " << pmg::format_double(oc.casimirs.c2) << '\n';
      }
      std::cout << "class " << pmg::orbit_tag_name(oc.tag) << '\n'
                << "branch " << oc.branch << '\n'
                << "chart_valid " << (oc.chart_valid ? "true" : "false") << '\n';
      if (*cas) {
        const auto res = pmg::kernel_residual(xi, c);
        std::cout << "kernel_residual " << pmg::format_double(res[0]) << ' ' << pmg::format_double(res[1]) << ' '
                  << pmg::format_double(res[2]) << '\n';
      }
      return 0;
    }
    if (*sim) return run_simulate(build_config(config_path, overrides), pmg::parse_sim_mode(mode), out_prefix);
    if (*cmp) return run_simulate(build_config(config_path, overrides), pmg::SimMode::Compare, out_prefix);
    if (app.got_subcommand("defaults")) {
      std::cout << pmg::RunConfig{}.to_text();
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
