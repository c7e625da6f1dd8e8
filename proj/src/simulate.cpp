#include "pmg/simulate.hpp"

namespace pmg {

namespace {

void append_row(std::string& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out += ',';
    out += format_double(v);
    first = false;
  }
  out += '\n';
}

}  // namespace

SimMode parse_sim_mode(std::string_view s) {
  if (s == "lorentz") return SimMode::Lorentz;
  if (s == "orbit") return SimMode::Orbit;
  if (s == "compare") return SimMode::Compare;
  throw ConfigError("unknown simulate mode '" + std::string(s) + "' (lorentz|orbit|compare)");
}

std::string lorentz_csv(const ClassicalTrajectory& traj) {
  std::string out(kLorentzCsvHeader);
  out += '\n';
  for (const auto& s : traj.samples) {
    const Eigen::Vector2d v = particle_velocity(s, traj.params);
    append_row(out, {s.t, s.x, s.y, s.Px, s.Py, s.Ex, s.Ey, s.pix, s.piy, s.B, s.beta,
                     hamiltonian(s, traj.params), v.x(), v.y()});
  }
  return out;
}

std::string orbit_csv(const OrbitTrajectory& traj, double c) {
  std::string out(kOrbitCsvHeader);
  out += '\n';
  for (std::size_t i = 0; i < traj.numeric.size(); ++i) {
    const OrbitChartPoint& p = traj.numeric[i];
    const CasimirTriple k = eval_casimirs(chart_embed(p, c), c);
    append_row(out, {traj.times[i], p.E.x(), p.E.y(), p.P.x(), p.P.y(), p.K.x(), p.K.y(), orbit_hamiltonian(p, c),
                     k.c0, k.c1, k.c2});
  }
  return out;
}

OrbitChartPoint initial_chart_point(const RunConfig& cfg) {
  return chart_project(moment_map_at(cfg.initial, cfg.particle, 0.0), cfg.particle.c);
}

SimulationResult run_simulation(const RunConfig& cfg, SimMode mode) {
  cfg.validate();
  SimulationResult res;
  const double c = cfg.particle.c;

  if (mode == SimMode::Lorentz || mode == SimMode::Compare) {
    const ClassicalTrajectory traj = integrate_lorentz(cfg.initial, cfg.particle, cfg.t_end, cfg.samples, cfg.integrator);
    res.files.emplace_back("lorentz.csv", lorentz_csv(traj));
    if (cfg.check_energy) res.report.push_back({"energy_drift", traj.energy_drift, 1e-9});
    res.report.push_back({"speed_bound_violation", traj.min_speed_margin > 0.0 ? 0.0 : 1.0, 0.5});
  }
  if (mode == SimMode::Orbit || mode == SimMode::Compare) {
    const OrbitTrajectory traj =
        orbit_flow(initial_chart_point(cfg), cfg.t_end, c, cfg.samples, cfg.integrator);
    res.files.emplace_back("orbit.csv", orbit_csv(traj, c));
    res.report.push_back({"orbit_flow_vs_closed_form", traj.max_deviation, 1e-8});
    res.report.push_back({"orbit_hamiltonian_drift", traj.hamiltonian_drift, 1e-9});
    res.report.push_back({"orbit_casimir_drift", traj.casimir_drift, 1e-9});
  }
  if (mode == SimMode::Compare && cfg.check_equivalence) {
    const EquivalenceReport eq = equivalence_check(cfg.initial, cfg.particle, cfg.t_end, cfg.samples, cfg.integrator);
    const Report lines = eq.checks(cfg.threshold);
    for (const auto& l : lines) res.report.push_back({"equivalence_" + l.name, l.max_residual, l.threshold});
  }
  return res;
}

}  // namespace pmg
