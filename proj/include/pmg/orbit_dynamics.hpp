#pragma once

#include "pmg/casimir.hpp"
#include "pmg/ode.hpp"

#include <vector>

namespace pmg {

using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec6 = Eigen::Matrix<double, 6, 1>;

/// Lie-Poisson structure on the (Ex, Ey, Px, Py, Kx, Ky) chart.
struct ChartPoissonMatrix {
  Mat6 entries;
};

/// Symplectic form on the chart; the inverse of the Poisson matrix.
struct ChartSymplecticMatrix {
  Mat6 entries;
};

/// Values of (B, H, J) reconstructed on the chart.
struct ChartFields {
  double B = 0, H = 0, J = 0;
};

ChartFields chart_fields(const OrbitChartPoint& p, double c);

ChartPoissonMatrix poisson_matrix(const OrbitChartPoint& p, double c);
ChartSymplecticMatrix symplectic_matrix(const OrbitChartPoint& p, double c);

/// (E x P + C2) / B(E).
double orbit_hamiltonian(const OrbitChartPoint& p, double c);

/// Gradient of the orbit Hamiltonian in chart coordinates, including the
/// dependence of B on E.
Vec6 orbit_hamiltonian_gradient(const OrbitChartPoint& p, double c);

/// Lambda * grad H at p.
Vec6 orbit_velocity(const OrbitChartPoint& p, double c);

/// Closed-form solution: E(t) = E0, P(t) = P0 - E0 t, K(t) = K0 + c^2 (P0 t - E0 t^2 / 2).
OrbitChartPoint orbit_closed_form(const OrbitChartPoint& p0, double t, double c);

struct OrbitTrajectory {
  std::vector<double> times;
  std::vector<OrbitChartPoint> numeric;
  std::vector<OrbitChartPoint> closed_form;
  double max_deviation = 0.0;       // max |numeric - closed| over coordinates and samples
  double hamiltonian_drift = 0.0;   // max |H(t) - H(0)| / (1 + |H(0)|)
  double casimir_drift = 0.0;       // max over k of |C_k(t) - C_k(0)| / (1 + |C_k(0)|)
  IntegrationStats stats;
};

/// Integrates the Hamiltonian flow on the chart and compares with the closed form.
OrbitTrajectory orbit_flow(const OrbitChartPoint& p0, double t_end, double c, int samples = 1000,
                           const IntegratorConfig& cfg = {});

}  // namespace pmg
