#include "pmg/checks.hpp"

#include "pmg/casimir.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <string>

namespace pmg {

namespace {

double inf_norm(const Mat9& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

Report jacobi_checks(const StructureConstants& sc, double c) {
  Report r;
  r.push_back({"antisymmetry_exact", sc.antisymmetric_exact() ? 0.0 : 1.0, 0.5});
  r.push_back({"jacobi_exact", static_cast<double>(sc.jacobi_violations_exact()), 0.5});
  r.push_back({"jacobi_float_c=1", sc.jacobi_residual(1.0), 1e-14});
  r.push_back({"jacobi_float_c=3e8", sc.jacobi_residual(3e8), 1e-14});
  if (c != 1.0 && c != 3e8) r.push_back({"jacobi_float_c=" + format_double(c), sc.jacobi_residual(c), 1e-14});
  return r;
}

Report ad_bracket_check(const LieAlgebra& alg) {
  // ad(i) e_j must reproduce the bracket computed straight from the tensor.
  double worst = 0.0;
  for (Generator gi : kGenerators)
    for (Generator gj : kGenerators) {
      const AlgebraElement z = alg.bracket(AlgebraElement::basis(gi), AlgebraElement::basis(gj));
      const AlgebraElement w = alg.bracket(AlgebraElement::basis(gj), AlgebraElement::basis(gi));
      worst = std::max(worst, (z.coeffs + w.coeffs).cwiseAbs().maxCoeff());
      worst = std::max(worst, (alg.ad_matrix(gi).col(slot(gj)) - z.coeffs).cwiseAbs().maxCoeff());
    }
  return {{"ad_matrix_vs_bracket", worst, 1e-15}};
}

Report exponential_checks(const LieAlgebra& alg, std::uint64_t seed, int samples) {
  Report r;
  std::uint64_t k = 0;
  for (Generator g : kGenerators) {
    std::mt19937_64 rng(seed + 1000 * ++k);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst = 0.0;
    double inverse = 0.0;
    for (int n = 0; n < samples; ++n) {
      const double s = u(rng);
      const Mat9 closed = exp_ad_closed(g, s, alg.c());
      const Mat9 generic = exp_matrix_generic(s * alg.ad_matrix(g));
      worst = std::max(worst, inf_norm(closed - generic) / std::max(1.0, inf_norm(generic)));
      const Mat9 prod = closed * exp_ad_closed(g, -s, alg.c());
      inverse = std::max(inverse, (prod - Mat9::Identity()).cwiseAbs().maxCoeff());
    }
    const std::string name(generator_name(g));
    r.push_back({"exp_closed_vs_generic_" + name, worst, 1e-10});
    r.push_back({"one_parameter_inverse_" + name, inverse, 1e-12});
  }
  return r;
}

Report coadjoint_checks(const LieAlgebra& alg, std::uint64_t seed, int samples) {
  const double c = alg.c();
  Report r;
  const double identity_err = (coadjoint_matrix(GroupParams{}, c) - Mat9::Identity()).cwiseAbs().maxCoeff();
  r.push_back({"coadjoint_identity", identity_err, 1e-300});

  std::mt19937_64 rng(seed + 7);
  double worst = 0.0;
  for (int n = 0; n < samples; ++n) {
    const GroupParams g = random_group_params(rng, 1.0);
    const CoalgebraPoint xi = random_coalgebra_point(rng, 2.0);
    const CasimirTriple before = eval_casimirs(xi, c);
    const CasimirTriple after = eval_casimirs(coad_apply(g, xi, c), c);
    worst = std::max({worst, std::abs(after.c0 - before.c0) / (1.0 + std::abs(before.c0)),
                      std::abs(after.c1 - before.c1) / (1.0 + std::abs(before.c1)),
                      std::abs(after.c2 - before.c2) / (1.0 + std::abs(before.c2))});
  }
  r.push_back({"coadjoint_casimir_invariance", worst, 1e-9});
  return r;
}

Report kernel_check(const LieAlgebra& alg, std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed + 11);
  const double c = alg.c();
  double worst = 0.0;
  for (int n = 0; n < samples; ++n) {
    const CoalgebraPoint xi = random_coalgebra_point(rng, 2.0);
    const Mat9 m = alg.lie_poisson_matrix(xi);
    const auto grads = casimir_gradients(xi, c);
    const double scale = xi.coords.squaredNorm() + 1.0;
    for (const Vec9& g : grads) worst = std::max(worst, (m * g).norm() / scale);
  }
  return {{"casimir_kernel", worst, 1e-10}};
}

}  // namespace

StructureConstants corrupted_constants() {
  return StructureConstants::poincare_maxwell().corrupted(Generator::H, Generator::Kx, Generator::Px, -2);
}

Report algebra_check(const AlgebraCheckOptions& opts) {
  const StructureConstants sc = opts.constants.value_or(StructureConstants::poincare_maxwell());
  const LieAlgebra alg(sc, opts.c);

  std::vector<std::future<Report>> parts;
  parts.push_back(std::async(std::launch::async, [&] { return jacobi_checks(sc, opts.c); }));
  parts.push_back(std::async(std::launch::async, [&] { return ad_bracket_check(alg); }));
  parts.push_back(std::async(std::launch::async, [&] { return exponential_checks(alg, opts.seed, opts.exp_samples); }));
  parts.push_back(
      std::async(std::launch::async, [&] { return coadjoint_checks(alg, opts.seed, opts.coadjoint_samples); }));
  parts.push_back(std::async(std::launch::async, [&] { return kernel_check(alg, opts.seed, opts.kernel_samples); }));

  Report out;
  for (auto& f : parts) {
    Report part = f.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace pmg
