#include "pmg/orbit_dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace pmg {

ChartFields chart_fields(const OrbitChartPoint& p, double c) {
  const CoalgebraPoint xi = chart_embed(p, c);
  return {xi[Generator::B], xi[Generator::H], xi[Generator::J]};
}

ChartPoissonMatrix poisson_matrix(const OrbitChartPoint& p, double c) {
  const auto [B, H, J] = chart_fields(p, c);
  const double c2 = c * c;
  Mat6 m;
  // clang-format off
  m <<  0,        0,        0,  0,  0,       -c2 * B,
        0,        0,        0,  0,  c2 * B,   0,
        0,        0,        0, -B, -H,        0,
        0,        0,        B,  0,  0,       -H,
        0,       -c2 * B,   H,  0,  0,       -c2 * J,
        c2 * B,   0,        0,  H,  c2 * J,   0;
  // clang-format on
  return {m};
}

ChartSymplecticMatrix symplectic_matrix(const OrbitChartPoint& p, double c) {
  const auto [B, H, J] = chart_fields(p, c);
  const double c2 = c * c;
  const double a = H * H / (c2 * c2 * B * B * B) - J / (c2 * B * B);
  const double h = H / (c2 * B * B);
  const double e = 1.0 / (c2 * B);
  const double u = 1.0 / B;
  Mat6 w;
  // clang-format off
  w <<  0,   a,   h,  0,  0,  e,
       -a,   0,   0,  h, -e,  0,
       -h,   0,   0,  u,  0,  0,
        0,  -h,  -u,  0,  0,  0,
        0,   e,   0,  0,  0,  0,
       -e,   0,   0,  0,  0,  0;
  // clang-format on
  return {w};
}

double orbit_hamiltonian(const OrbitChartPoint& p, double c) {
  const double B = chart_field(p, c);
  return (p.E.x() * p.P.y() - p.E.y() * p.P.x() + p.casimirs.c2) / B;
}

Vec6 orbit_hamiltonian_gradient(const OrbitChartPoint& p, double c) {
  const double B = chart_field(p, c);
  const double H = (p.E.x() * p.P.y() - p.E.y() * p.P.x() + p.casimirs.c2) / B;
  const double c2 = c * c;
  Vec6 g;
  g << p.P.y() / B - H * p.E.x() / (c2 * B * B),
      -p.P.x() / B - H * p.E.y() / (c2 * B * B),
      -p.E.y() / B,
       p.E.x() / B,
       0.0,
       0.0;
  return g;
}

Vec6 orbit_velocity(const OrbitChartPoint& p, double c) {
  return poisson_matrix(p, c).entries * orbit_hamiltonian_gradient(p, c);
}

OrbitChartPoint orbit_closed_form(const OrbitChartPoint& p0, double t, double c) {
  OrbitChartPoint p = p0;
  p.P = p0.P - p0.E * t;
  p.K = p0.K + c * c * (p0.P * t - 0.5 * p0.E * t * t);
  return p;
}

OrbitTrajectory orbit_flow(const OrbitChartPoint& p0, double t_end, double c, int samples,
                           const IntegratorConfig& cfg) {
  chart_field(p0, c);  // validates the starting point
  OrbitTrajectory traj;
  traj.times = uniform_grid(t_end, samples);

  const std::function<Vec6(double, const Vec6&)> rhs = [&p0, c](double, const Vec6& x) {
    OrbitChartPoint p = p0;
    p.set_coords(x);
    return orbit_velocity(p, c);
  };
  const auto states = integrate_on_grid<6>(rhs, p0.coords(), traj.times, cfg, &traj.stats);

  const double h0 = orbit_hamiltonian(p0, c);
  const CasimirTriple k0 = p0.casimirs;
  for (std::size_t i = 0; i < states.size(); ++i) {
    OrbitChartPoint p = p0;
    p.set_coords(states[i]);
    const OrbitChartPoint exact = orbit_closed_form(p0, traj.times[i], c);
    traj.max_deviation = std::max(traj.max_deviation, (p.coords() - exact.coords()).cwiseAbs().maxCoeff());

    const double h = orbit_hamiltonian(p, c);
    traj.hamiltonian_drift = std::max(traj.hamiltonian_drift, std::abs(h - h0) / (1.0 + std::abs(h0)));
    const CasimirTriple k = eval_casimirs(chart_embed(p, c), c);
    traj.casimir_drift = std::max({traj.casimir_drift, std::abs(k.c0 - k0.c0) / (1.0 + std::abs(k0.c0)),
                                   std::abs(k.c1 - k0.c1) / (1.0 + std::abs(k0.c1)),
                                   std::abs(k.c2 - k0.c2) / (1.0 + std::abs(k0.c2))});
    traj.numeric.push_back(p);
    traj.closed_form.push_back(exact);
  }
  return traj;
}

}  // namespace pmg
