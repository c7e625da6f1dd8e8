#pragma once

#include "pmg/extended_phase.hpp"
#include "pmg/ode.hpp"
#include "pmg/orbit_dynamics.hpp"

#include <vector>

namespace pmg {

struct ClassicalTrajectory {
  std::vector<ExtendedPhaseState> samples;
  ParticleParams params;
  double energy_drift = 0.0;        // max |H(t) - H(0)| / |H(0)|
  double min_speed_margin = 0.0;    // min over samples of c^2 - |v|^2
  bool strong_electric = false;     // |E| >= c |B|: unbounded drift regime
  IntegrationStats stats;
};

/// Velocity reconstructed from the kinetic momentum, v = c^2 p_kin / energy.
Eigen::Vector2d particle_velocity(const ExtendedPhaseState& s, const ParticleParams& pp);

/// Hamilton's equations of the extended Hamiltonian.  The fields are constant;
/// (pix, piy, beta) evolve but never feed back into (x, y, Px, Py).
PhaseVector extended_vector_field(const ExtendedPhaseState& s, const ParticleParams& pp);

/// Throws std::invalid_argument for t_end <= 0 or samples < 2, IntegrationError
/// on integrator failure, std::runtime_error if the speed bound is violated.
ClassicalTrajectory integrate_lorentz(const ExtendedPhaseState& s0, const ParticleParams& pp, double t_end,
                                      int samples = 1000, const IntegratorConfig& cfg = {});

struct EquivalenceReport {
  double max_orbit_deviation = 0.0;   // P and K against the closed orbit solution, scaled
  double max_integral_drift = 0.0;    // B, E, H, J constancy, scaled
  double max_casimir_drift = 0.0;     // scaled
  double max_constant_drift = 0.0;    // moment map at the state's own time: all nine constant
  double orbit_flow_deviation = 0.0;  // chart flow from the mapped initial point vs mapped samples
  double speed_margin = 0.0;
  bool strong_electric = false;

  Report checks(double tol) const;
};

/// Integrates the Lorentz motion, pushes each sample through the canonical
/// (t = 0) moment map and compares with the orbit equations of motion.
/// Requires q B != 0.  Scaled deviations divide by 1 + max |component| along
/// the trajectory.
EquivalenceReport equivalence_check(const ExtendedPhaseState& s0, const ParticleParams& pp, double t_end,
                                    int samples = 1000, const IntegratorConfig& cfg = {});

struct CyclotronMeasurement {
  double radius = 0.0;
  double period = 0.0;
  double expected_radius = 0.0;
  double expected_period = 0.0;
};

/// Pure magnetic field run from the origin with kinetic momentum (p, 0);
/// radius from a least-squares circle fit, period from the rotation rate of the
/// velocity direction.
CyclotronMeasurement measure_cyclotron(const ParticleParams& pp, double B, double p, const IntegratorConfig& cfg = {});

}  // namespace pmg
