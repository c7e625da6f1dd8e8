#pragma once

#include "pmg/algebra.hpp"
#include "pmg/report.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace pmg {

struct AlgebraCheckOptions {
  std::uint64_t seed = 42;
  double c = 1.0;
  int exp_samples = 200;       // per generator, s in [-2, 2]
  int coadjoint_samples = 500; // (g, xi) pairs, params in [-1, 1], coords in [-2, 2]
  int kernel_samples = 1000;
  /// Replaces the structure constants used by the suite (test hook for the
  /// negative control).
  std::optional<StructureConstants> constants;
};

/// Structure constants with [H, Kx] = -2 c^2 Px; violates the Jacobi identity.
StructureConstants corrupted_constants();

/// Lie-algebra self-check: exact and floating Jacobi identity, ad-matrix /
/// bracket agreement, closed-form versus generic exponentials per generator,
/// one-parameter subgroups, coadjoint identity and Casimir invariance, and
/// the Casimir kernel property.  Independent checks run concurrently; the
/// report order is fixed.
Report algebra_check(const AlgebraCheckOptions& opts);

/// Uniform random group parameters in [-a, a].
template <class Rng>
GroupParams random_group_params(Rng& rng, double a) {
  std::uniform_real_distribution<double> u(-a, a);
  GroupParams g;
  for (Generator gen : kGenerators) g[gen] = u(rng);
  return g;
}

/// Uniform random coalgebra point with coordinates in [-a, a].
template <class Rng>
CoalgebraPoint random_coalgebra_point(Rng& rng, double a) {
  std::uniform_real_distribution<double> u(-a, a);
  CoalgebraPoint xi;
  for (int i = 0; i < kDim; ++i) xi.coords[i] = u(rng);
  return xi;
}

}  // namespace pmg
