#include "pmg/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pmg {

namespace {

struct Kinetic {
  double kx, ky, energy;
};

Kinetic kinetic(const ExtendedPhaseState& s, const ParticleParams& pp) {
  const double kx = s.Px + pp.q * s.B * s.y / 2.0;
  const double ky = s.Py - pp.q * s.B * s.x / 2.0;
  const double energy = pp.c * std::sqrt(kx * kx + ky * ky + pp.m0 * pp.m0 * pp.c * pp.c);
  return {kx, ky, energy};
}

double scaled_spread(const std::vector<double>& values, double reference) {
  double mag = 0.0;
  double dev = 0.0;
  for (double v : values) {
    mag = std::max(mag, std::abs(v));
    dev = std::max(dev, std::abs(v - reference));
  }
  return dev / (1.0 + mag);
}

}  // namespace

Eigen::Vector2d particle_velocity(const ExtendedPhaseState& s, const ParticleParams& pp) {
  const Kinetic k = kinetic(s, pp);
  const double c2 = pp.c * pp.c;
  return {c2 * k.kx / k.energy, c2 * k.ky / k.energy};
}

PhaseVector extended_vector_field(const ExtendedPhaseState& s, const ParticleParams& pp) {
  const Eigen::Vector2d v = particle_velocity(s, pp);
  const double q = pp.q;
  PhaseVector d = PhaseVector::Zero();
  d[0] = v.x();
  d[1] = v.y();
  d[2] = q * s.B * v.y() / 2.0 + q * s.Ex;
  d[3] = -q * s.B * v.x() / 2.0 + q * s.Ey;
  // Ex, Ey and B (slots 4, 5, 8) stay constant.
  d[6] = q * s.x;
  d[7] = q * s.y;
  d[9] = -q * (v.x() * s.y - v.y() * s.x) / 2.0;
  return d;
}

ClassicalTrajectory integrate_lorentz(const ExtendedPhaseState& s0, const ParticleParams& pp, double t_end,
                                      int samples, const IntegratorConfig& cfg) {
  pp.validate();
  if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");

  std::vector<double> grid = uniform_grid(t_end, samples);
  for (double& t : grid) t += s0.t;

  const std::function<PhaseVector(double, const PhaseVector&)> rhs = [&pp](double t, const PhaseVector& y) {
    return extended_vector_field(from_vector(y, t), pp);
  };

  ClassicalTrajectory traj;
  traj.params = pp;
  const auto states = integrate_on_grid<kPhaseDim>(rhs, to_vector(s0), grid, cfg, &traj.stats);

  const double h0 = hamiltonian(s0, pp);
  const double c2 = pp.c * pp.c;
  traj.min_speed_margin = c2;
  for (std::size_t i = 0; i < states.size(); ++i) {
    ExtendedPhaseState s = from_vector(states[i], grid[i]);
    traj.energy_drift = std::max(traj.energy_drift, std::abs(hamiltonian(s, pp) - h0) / std::abs(h0));
    traj.min_speed_margin = std::min(traj.min_speed_margin, c2 - particle_velocity(s, pp).squaredNorm());
    traj.samples.push_back(s);
  }
  if (!(traj.min_speed_margin > 0.0))
    throw std::runtime_error("speed bound |v| < c violated: integration is inconsistent");
  traj.strong_electric = std::hypot(s0.Ex, s0.Ey) >= pp.c * std::abs(s0.B);
  return traj;
}

Report EquivalenceReport::checks(double tol) const {
  return {
      {"orbit_equations", max_orbit_deviation, tol},
      {"integrals_constant", max_integral_drift, tol},
      {"casimirs_constant", max_casimir_drift, tol},
      {"constants_of_motion", max_constant_drift, tol},
      {"orbit_flow_match", orbit_flow_deviation, tol},
  };
}

EquivalenceReport equivalence_check(const ExtendedPhaseState& s0, const ParticleParams& pp, double t_end,
                                    int samples, const IntegratorConfig& cfg) {
  if (pp.q * s0.B == 0.0) throw ChartSingularError("equivalence check requires q B != 0");
  const ClassicalTrajectory traj = integrate_lorentz(s0, pp, t_end, samples, cfg);
  const double c = pp.c;

  std::vector<CoalgebraPoint> canonical;
  std::vector<CoalgebraPoint> own_time;
  for (const auto& s : traj.samples) {
    canonical.push_back(moment_map_at(s, pp, 0.0));
    own_time.push_back(moment_map(s, pp));
  }

  const OrbitChartPoint p0 = chart_project(canonical.front(), c);
  std::array<std::vector<double>, kDim> series;       // canonical components
  std::array<std::vector<double>, kDim> predicted;    // orbit solution (P, K) or initial value
  std::array<std::vector<double>, kDim> own_series;
  std::array<std::vector<double>, 3> casimirs;
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    const double t = traj.samples[i].t - s0.t;
    const OrbitChartPoint exact = orbit_closed_form(p0, t, c);
    CoalgebraPoint expected = canonical.front();
    expected[Generator::Px] = exact.P.x();
    expected[Generator::Py] = exact.P.y();
    expected[Generator::Kx] = exact.K.x();
    expected[Generator::Ky] = exact.K.y();
    for (int k = 0; k < kDim; ++k) {
      series[static_cast<std::size_t>(k)].push_back(canonical[i].coords[k]);
      predicted[static_cast<std::size_t>(k)].push_back(expected.coords[k]);
      own_series[static_cast<std::size_t>(k)].push_back(own_time[i].coords[k]);
    }
    const CasimirTriple ct = eval_casimirs(canonical[i], c);
    casimirs[0].push_back(ct.c0);
    casimirs[1].push_back(ct.c1);
    casimirs[2].push_back(ct.c2);
  }

  EquivalenceReport rep;
  rep.speed_margin = traj.min_speed_margin;
  rep.strong_electric = traj.strong_electric;
  for (Generator g : kGenerators) {
    const auto k = static_cast<std::size_t>(slot(g));
    double mag = 0.0;
    double dev = 0.0;
    for (std::size_t i = 0; i < series[k].size(); ++i) {
      mag = std::max(mag, std::abs(series[k][i]));
      dev = std::max(dev, std::abs(series[k][i] - predicted[k][i]));
    }
    const double scaled = dev / (1.0 + mag);
    const bool evolving = g == Generator::Px || g == Generator::Py || g == Generator::Kx || g == Generator::Ky;
    if (evolving)
      rep.max_orbit_deviation = std::max(rep.max_orbit_deviation, scaled);
    else
      rep.max_integral_drift = std::max(rep.max_integral_drift, scaled);
    rep.max_constant_drift = std::max(rep.max_constant_drift, scaled_spread(own_series[k], own_series[k].front()));
  }
  for (const auto& cs : casimirs)
    rep.max_casimir_drift = std::max(rep.max_casimir_drift, scaled_spread(cs, cs.front()));

  std::vector<double> rel_times;
  for (const auto& s : traj.samples) rel_times.push_back(s.t - s0.t);
  const OrbitTrajectory flow = orbit_flow(p0, rel_times.back(), c, samples, cfg);
  for (std::size_t i = 0; i < flow.numeric.size(); ++i) {
    const Vec6 mapped = chart_project(canonical[i], c).coords();
    const Vec6 diff = flow.numeric[i].coords() - mapped;
    rep.orbit_flow_deviation =
        std::max(rep.orbit_flow_deviation, diff.cwiseAbs().maxCoeff() / (1.0 + mapped.cwiseAbs().maxCoeff()));
  }
  return rep;
}

CyclotronMeasurement measure_cyclotron(const ParticleParams& pp, double B, double p, const IntegratorConfig& cfg) {
  pp.validate();
  if (pp.q * B == 0.0) throw std::invalid_argument("cyclotron motion needs q B != 0");
  CyclotronMeasurement m;
  const double gamma = std::sqrt(1.0 + (p / (pp.m0 * pp.c)) * (p / (pp.m0 * pp.c)));
  m.expected_radius = std::abs(p / (pp.q * B));
  m.expected_period = 2.0 * std::numbers::pi * gamma * pp.m0 / std::abs(pp.q * B);

  ExtendedPhaseState s0;
  s0.B = B;
  s0.Px = p;  // kinetic momentum (p, 0) at the origin
  const ClassicalTrajectory traj = integrate_lorentz(s0, pp, m.expected_period, 2001, cfg);

  // Algebraic circle fit: x^2 + y^2 + D x + E y + F = 0.
  const auto n = static_cast<Eigen::Index>(traj.samples.size());
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd rhs(n);
  Eigen::VectorXd times(n);
  Eigen::VectorXd angle(n);
  double prev = 0.0;
  double unwrap = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& s = traj.samples[static_cast<std::size_t>(i)];
    a.row(i) << s.x, s.y, 1.0;
    rhs[i] = -(s.x * s.x + s.y * s.y);
    const Eigen::Vector2d v = particle_velocity(s, pp);
    const double theta = std::atan2(v.y(), v.x());
    if (i > 0) {
      double d = theta - prev;
      if (d > std::numbers::pi) unwrap -= 2.0 * std::numbers::pi;
      if (d < -std::numbers::pi) unwrap += 2.0 * std::numbers::pi;
    }
    prev = theta;
    angle[i] = theta + unwrap;
    times[i] = s.t;
  }
  const Eigen::Vector3d coef = a.colPivHouseholderQr().solve(rhs);
  m.radius = std::sqrt(coef[0] * coef[0] / 4.0 + coef[1] * coef[1] / 4.0 - coef[2]);

  const double tm = times.mean();
  const double am = angle.mean();
  const double slope = ((times.array() - tm) * (angle.array() - am)).sum() / (times.array() - tm).square().sum();
  m.period = 2.0 * std::numbers::pi / std::abs(slope);
  return m;
}

}  // namespace pmg
