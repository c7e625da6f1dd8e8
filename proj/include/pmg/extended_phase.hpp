#pragma once

#include "pmg/algebra.hpp"
#include "pmg/jet.hpp"
#include "pmg/report.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>

namespace pmg {

struct ParticleParams {
  double q = 1.0;   // charge
  double m0 = 1.0;  // rest mass
  double c = 1.0;   // speed of light

  /// Throws std::invalid_argument unless m0 > 0 and c > 0.
  void validate() const;
};

/// Coordinates of the extended phase space, in canonical-pair order, then time.
enum class PhaseCoord : int { x, y, Px, Py, Ex, Ey, pix, piy, B, beta, t };

inline constexpr int kPhaseDim = 10;
inline constexpr int kJetDim = 11;  // phase coordinates plus explicit time

template <class T>
struct PhaseVars {
  T x{}, y{}, Px{}, Py{}, Ex{}, Ey{}, pix{}, piy{}, B{}, beta{}, t{};
};

/// Point of the extended phase space (x, y, Px, Py, Ex, Ey, pix, piy, B, beta) at time t.
using ExtendedPhaseState = PhaseVars<double>;

using PhaseVector = Eigen::Matrix<double, kPhaseDim, 1>;
PhaseVector to_vector(const ExtendedPhaseState& s);
ExtendedPhaseState from_vector(const PhaseVector& v, double t);

/// Relativistic Hamiltonian in the symmetric gauge.
template <class T>
T hamiltonian_expr(const PhaseVars<T>& s, const ParticleParams& pp) {
  using std::sqrt;
  const T kx = s.Px + pp.q * s.B * s.y / 2.0;
  const T ky = s.Py - pp.q * s.B * s.x / 2.0;
  const T root = sqrt(kx * kx + ky * ky + pp.m0 * pp.m0 * pp.c * pp.c);
  return pp.c * root - pp.q * s.Ex * s.x - pp.q * s.Ey * s.y;
}

/// The nine observables (B, Ex, Ey, H, Px, Py, Kx, Ky, J) evaluated at the
/// explicit time `s.t`.
template <class T>
std::array<T, kDim> moment_expr(const PhaseVars<T>& s, const ParticleParams& pp) {
  using std::sqrt;
  const double q = pp.q;
  const double c = pp.c;
  const double c2 = c * c;
  const T kx = s.Px + q * s.B * s.y / 2.0;
  const T ky = s.Py - q * s.B * s.x / 2.0;
  const T energy = c * sqrt(kx * kx + ky * ky + pp.m0 * pp.m0 * c2);

  std::array<T, kDim> f;
  f[slot(Generator::B)] = q * s.B;
  f[slot(Generator::Ex)] = -q * s.Ex;
  f[slot(Generator::Ey)] = -q * s.Ey;
  f[slot(Generator::H)] = energy - q * s.Ex * s.x - q * s.Ey * s.y;
  f[slot(Generator::Px)] = s.Px - q * s.B * s.y / 2.0 - q * s.Ex * s.t;
  f[slot(Generator::Py)] = s.Py + q * s.B * s.x / 2.0 - q * s.Ey * s.t;
  f[slot(Generator::Kx)] = s.x * energy - c2 * s.t * (s.Px - q * s.B * s.y / 2.0 - q * s.Ex * s.t / 2.0) -
                           q * s.Ey * s.x * s.y / 2.0 - q * s.Ex * s.x * s.x / 2.0 - c2 * s.B * s.piy -
                           s.Ey * s.beta;
  f[slot(Generator::Ky)] = s.y * energy - c2 * s.t * (s.Py + q * s.B * s.x / 2.0 - q * s.Ey * s.t / 2.0) -
                           q * s.Ex * s.x * s.y / 2.0 - q * s.Ey * s.y * s.y / 2.0 + c2 * s.B * s.pix +
                           s.Ex * s.beta;
  f[slot(Generator::J)] = s.x * s.Py - s.y * s.Px + s.Ex * s.piy - s.Ey * s.pix;
  return f;
}

double hamiltonian(const ExtendedPhaseState& s, const ParticleParams& pp);

/// Moment map at the state's own time s.t; P and K are constants of motion.
CoalgebraPoint moment_map(const ExtendedPhaseState& s, const ParticleParams& pp);

/// Moment map of the algebra frozen at `algebra_time` (the t = 0 member is the
/// canonical one; its P and K follow the orbit equations of motion).
CoalgebraPoint moment_map_at(const ExtendedPhaseState& s, const ParticleParams& pp, double algebra_time);

// --- observables and the extended bracket ----------------------------------

using PhaseJet = Jet<kJetDim>;

/// Differentiable function on the extended phase space (with explicit time).
struct Observable {
  std::string name;
  std::function<PhaseJet(const PhaseVars<PhaseJet>&)> eval;
};

Observable coordinate_observable(PhaseCoord coord);
Observable moment_observable(Generator g, const ParticleParams& pp);
Observable hamiltonian_observable(const ParticleParams& pp);

enum class GradientMode { Analytic, FiniteDifference };

/// Value and partials with respect to (x, y, Px, Py, Ex, Ey, pix, piy, B, beta, t).
struct ObservableGradient {
  double value = 0.0;
  Eigen::Matrix<double, kJetDim, 1> d = Eigen::Matrix<double, kJetDim, 1>::Zero();
  double partial(PhaseCoord c) const { return d[static_cast<int>(c)]; }
};

/// Central differences use h = 1e-6 (1 + |coord|).
ObservableGradient gradient(const Observable& f, const ExtendedPhaseState& s,
                            GradientMode mode = GradientMode::Analytic);

/// Sum of the five canonical-pair terms (x,Px), (y,Py), (Ex,pix), (Ey,piy), (B,beta).
double poisson_contract(const ObservableGradient& df, const ObservableGradient& dg);

double extended_bracket(const Observable& f, const Observable& g, const ExtendedPhaseState& s,
                        GradientMode mode = GradientMode::Analytic);

/// Uniform random state: coordinates and momenta in [-2, 2], fields in [0.2, 2],
/// time in [-2, 2].
template <class Rng>
ExtendedPhaseState random_phase_state(Rng& rng) {
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> field(0.2, 2.0);
  ExtendedPhaseState s;
  s.x = coord(rng);
  s.y = coord(rng);
  s.Px = coord(rng);
  s.Py = coord(rng);
  s.Ex = field(rng);
  s.Ey = field(rng);
  s.pix = coord(rng);
  s.piy = coord(rng);
  s.B = field(rng);
  s.beta = coord(rng);
  s.t = coord(rng);
  return s;
}

struct BracketTableReport {
  double max_deviation = 0.0;         // over all pairs and states
  std::array<double, 36> pair_max{};  // per unordered pair (i < j), row-major
  int samples = 0;
};

/// Compares {f_i, f_j} with sum_k c_ij^k f_k for all 36 pairs at random states.
/// Deviation is |lhs - rhs| / (1 + |rhs|).
BracketTableReport bracket_table_check(int samples, std::uint64_t seed, const ParticleParams& pp,
                                       GradientMode mode = GradientMode::Analytic);

/// max over random states of |{f, H} + df/dt| / (1 + |grad f| |grad H|) for each of
/// the nine observables.  Integrals of motion have df/dt = 0.
std::array<double, kDim> motion_invariance_check(int samples, std::uint64_t seed, const ParticleParams& pp);

/// Check lines for the extended-phase suite.
Report extended_phase_report(int samples, std::uint64_t seed, const ParticleParams& pp);

}  // namespace pmg
