#include "pmg/algebra.hpp"
#include "pmg/checks.hpp"
#include "pmg/report.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <thread>

using namespace pmg;
using G = Generator;

namespace {

AlgebraElement e(G g) { return AlgebraElement::basis(g); }

// Plain Taylor sum in long double, no scaling. Fine for ||M|| of a few units.
Mat9 taylor_exp(const Mat9& m) {
  using MatL = Eigen::Matrix<long double, 9, 9>;
  const MatL a = m.cast<long double>();
  MatL term = MatL::Identity();
  MatL sum = MatL::Identity();
  for (int k = 1; k < 80; ++k) {
    term = term * a / static_cast<long double>(k);
    sum += term;
  }
  return sum.cast<double>();
}

double scaled_diff(const Mat9& a, const Mat9& b) {
  const double n = a.cwiseAbs().rowwise().sum().maxCoeff();
  return (a - b).cwiseAbs().rowwise().sum().maxCoeff() / std::max(1.0, n);
}

}  // namespace

TEST(Bracket, DocumentedExamples) {
  for (double c : {1.0, 2.0, 3e8}) {
    LieAlgebra alg(c);
    const Vec9 pxpy = alg.bracket(e(G::Px), e(G::Py)).coeffs;
    Vec9 want = Vec9::Zero();
    want[slot(G::B)] = -1.0;
    EXPECT_EQ(pxpy, want);

    const Vec9 hk = alg.bracket(e(G::H), e(G::Kx)).coeffs;
    want.setZero();
    want[slot(G::Px)] = -c * c;
    EXPECT_EQ(hk, want);
  }
}

TEST(Bracket, SelfBracketVanishes) {
  LieAlgebra alg(1.7);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int n = 0; n < 50; ++n) {
    AlgebraElement x;
    for (int i = 0; i < kDim; ++i) x.coeffs[i] = u(rng);
    EXPECT_LT(alg.bracket(x, x).coeffs.cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Bracket, FullTable) {
  // Hand transcription of the nonvanishing commutators, c = 2.
  const double c2 = 4.0;
  struct Row {
    G a, b, k;
    double v;
  };
  const Row rows[] = {
      {G::H, G::Kx, G::Px, -c2}, {G::H, G::Ky, G::Py, -c2}, {G::B, G::Kx, G::Ey, 1},
      {G::B, G::Ky, G::Ex, -1},  {G::Px, G::Kx, G::H, -1},  {G::Py, G::Ky, G::H, -1},
      {G::H, G::Px, G::Ex, 1},   {G::H, G::Py, G::Ey, 1},   {G::Kx, G::Ky, G::J, -c2},
      {G::Ex, G::Ky, G::B, -c2}, {G::Ey, G::Kx, G::B, c2},  {G::Px, G::J, G::Py, -1},
      {G::Py, G::J, G::Px, 1},   {G::Px, G::Py, G::B, -1},  {G::Kx, G::J, G::Ky, -1},
      {G::Ky, G::J, G::Kx, 1},   {G::Ex, G::J, G::Ey, -1},  {G::Ey, G::J, G::Ex, 1},
  };
  Eigen::Matrix<Vec9, 9, 9> want;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) want(i, j).setZero();
  for (const auto& r : rows) {
    want(slot(r.a), slot(r.b))[slot(r.k)] += r.v;
    want(slot(r.b), slot(r.a))[slot(r.k)] -= r.v;
  }
  LieAlgebra alg(2.0);
  for (G a : kGenerators)
    for (G b : kGenerators)
      EXPECT_EQ(alg.bracket(e(a), e(b)).coeffs, want(slot(a), slot(b)))
          << generator_name(a) << "," << generator_name(b);
}

TEST(AdMatrix, MatchesBracketOnAllPairs) {
  LieAlgebra alg(1.3);
  for (G a : kGenerators)
    for (G b : kGenerators)
      EXPECT_EQ(alg.ad_matrix(a) * e(b).coeffs, alg.bracket(e(a), e(b)).coeffs);
}

TEST(AdMatrix, JActsOnPx) {
  LieAlgebra alg(1.0);
  const Vec9 y = alg.ad_matrix(G::J) * e(G::Px).coeffs;
  // [J, Px] = -[Px, J] = Py
  EXPECT_EQ(y[slot(G::Py)], 1.0);
  EXPECT_EQ(y.cwiseAbs().sum(), 1.0);
}

TEST(AdMatrix, BHasTwoNonzeros) {
  LieAlgebra alg(1.0);
  const Mat9& m = alg.ad_matrix(G::B);
  EXPECT_EQ((m.array() != 0.0).count(), 2);
  EXPECT_EQ(m(slot(G::Ey), slot(G::Kx)), 1.0);
  EXPECT_EQ(m(slot(G::Ex), slot(G::Ky)), -1.0);
}

TEST(AdMatrix, IndexAccessAndRange) {
  LieAlgebra alg(1.0);
  EXPECT_EQ(alg.ad_matrix(9), alg.ad_matrix(G::J));
  EXPECT_THROW(alg.ad_matrix(0), std::out_of_range);
  EXPECT_THROW(alg.ad_matrix(10), std::out_of_range);
}

TEST(AdMatrix, FieldGeneratorsNilpotent) {
  LieAlgebra alg(2.0);
  for (G g : {G::B, G::Ex, G::Ey, G::Px, G::Py}) {
    const Mat9& m = alg.ad_matrix(g);
    EXPECT_LT((m * m * m).cwiseAbs().maxCoeff(), 1e-300) << generator_name(g);
  }
}

TEST(StructureConstants, ExactAntisymmetryAndJacobi) {
  const auto sc = StructureConstants::poincare_maxwell();
  EXPECT_TRUE(sc.antisymmetric_exact());
  EXPECT_EQ(sc.jacobi_violations_exact(), 0);
  EXPECT_LT(sc.jacobi_residual(1.0), 1e-14);
  EXPECT_LT(sc.jacobi_residual(3e8), 1e-14);
}

TEST(StructureConstants, CorruptionBreaksJacobi) {
  const auto bad = corrupted_constants();
  EXPECT_TRUE(bad.antisymmetric_exact());
  EXPECT_GT(bad.jacobi_violations_exact(), 0);
  EXPECT_GT(bad.jacobi_residual(1.0), 0.1);
}

TEST(StructureConstants, ExactPolynomial) {
  const auto sc = StructureConstants::poincare_maxwell();
  const CPoly hk = sc.exact(G::H, G::Kx, G::Px);
  EXPECT_EQ(hk[0], 0);
  EXPECT_EQ(hk[1], -1);
  EXPECT_EQ(hk[2], 0);
  EXPECT_DOUBLE_EQ(sc.value(slot(G::H), slot(G::Kx), slot(G::Px), 3.0), -9.0);
}

TEST(ExpGeneric, TrivialCases) {
  EXPECT_EQ(exp_matrix_generic(Mat9::Zero()), Mat9::Identity());
  const Mat9 d = exp_matrix_generic(Mat9::Identity());
  EXPECT_LT((d - std::exp(1.0) * Mat9::Identity()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(ExpGeneric, MatchesTaylorOracle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int n = 0; n < 20; ++n) {
    Mat9 m;
    for (int i = 0; i < 81; ++i) m.data()[i] = u(rng);
    EXPECT_LT(scaled_diff(exp_matrix_generic(m), taylor_exp(m)), 1e-13);
  }
}

TEST(ExpGeneric, RejectsNonFinite) {
  Mat9 m = Mat9::Zero();
  m(0, 0) = std::nan("");
  EXPECT_THROW(exp_matrix_generic(m), std::overflow_error);
}

TEST(ExpClosed, IdentityAtZero) {
  for (G g : kGenerators) EXPECT_EQ(exp_ad_closed(g, 0.0, 1.0), Mat9::Identity()) << generator_name(g);
}

TEST(ExpClosed, MatchesTaylorOracle) {
  for (double c : {1.0, 2.0}) {
    LieAlgebra alg(c);
    for (G g : kGenerators)
      for (double s : {-2.0, -0.7, 0.3, 1.9})
        EXPECT_LT(scaled_diff(exp_ad_closed(g, s, c), taylor_exp(s * alg.ad_matrix(g))), 1e-12)
            << generator_name(g) << " s=" << s << " c=" << c;
  }
}

TEST(ExpClosed, HandDerivedEntries) {
  const double s = 0.8, c = 2.0;
  // ad(H): Kx -> -c^2 Px -> -c^2 Ex
  const Mat9 h = exp_ad_closed(G::H, s, c);
  EXPECT_DOUBLE_EQ(h(slot(G::Ex), slot(G::Px)), s);
  EXPECT_DOUBLE_EQ(h(slot(G::Px), slot(G::Kx)), -c * c * s);
  EXPECT_DOUBLE_EQ(h(slot(G::Ex), slot(G::Kx)), -c * c * s * s / 2);
  // ad(Kx) on span{B, Ey}: B -> -Ey, Ey -> -c^2 B
  const Mat9 k = exp_ad_closed(G::Kx, s, c);
  EXPECT_NEAR(k(slot(G::B), slot(G::B)), std::cosh(c * s), 1e-14);
  EXPECT_NEAR(k(slot(G::B), slot(G::Ey)), -c * std::sinh(c * s), 1e-14);
  EXPECT_NEAR(k(slot(G::Ey), slot(G::B)), -std::sinh(c * s) / c, 1e-14);
  // ad(J) rotates P: [J, Px] = Py, [J, Py] = -Px
  const Mat9 j = exp_ad_closed(G::J, s, c);
  EXPECT_NEAR(j(slot(G::Px), slot(G::Px)), std::cos(s), 1e-15);
  EXPECT_NEAR(j(slot(G::Py), slot(G::Px)), std::sin(s), 1e-15);
}

TEST(ExpClosed, OneParameterInverse) {
  for (G g : kGenerators)
    for (double s : {-2.0, 0.5, 1.7})
      EXPECT_LT((exp_ad_closed(g, s, 1.5) * exp_ad_closed(g, -s, 1.5) - Mat9::Identity()).cwiseAbs().maxCoeff(),
                1e-12);
}

TEST(Coadjoint, IdentityParams) {
  EXPECT_EQ(coadjoint_matrix(GroupParams{}, 1.0), Mat9::Identity());
  CoalgebraPoint xi;
  for (int i = 0; i < kDim; ++i) xi.coords[i] = i - 4.0;
  EXPECT_EQ(coad_apply(GroupParams{}, xi, 1.0).coords, xi.coords);
}

TEST(Coadjoint, SingleFactor) {
  GroupParams g;
  g.b = 0.7;
  EXPECT_EQ(coadjoint_matrix(g, 2.0), exp_ad_closed(G::B, -0.7, 2.0));
  GroupParams k;
  k.nx = -1.1;
  EXPECT_EQ(coadjoint_matrix(k, 2.0), exp_ad_closed(G::Kx, 1.1, 2.0));
}

TEST(Coadjoint, TauInverse) {
  GroupParams a, b;
  a.tau = 1.0;
  b.tau = -1.0;
  EXPECT_LT((coadjoint_matrix(a, 1.0) * coadjoint_matrix(b, 1.0) - Mat9::Identity()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Coadjoint, ProductOrder) {
  GroupParams g;
  g.b = 0.3;
  g.tau = -0.4;
  g.phi = 0.9;
  const Mat9 want = exp_ad_closed(G::J, -0.9, 1.0) * exp_ad_closed(G::H, 0.4, 1.0) * exp_ad_closed(G::B, -0.3, 1.0);
  EXPECT_LT((coadjoint_matrix(g, 1.0) - want).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(GroupParams, IndexByGenerator) {
  GroupParams g;
  g[G::Ky] = 2.5;
  EXPECT_EQ(g.ny, 2.5);
  const GroupParams& cg = g;
  EXPECT_EQ(cg[G::Ky], 2.5);
}

TEST(AlgebraCheck, DefaultSuitePasses) {
  const Report r = algebra_check(AlgebraCheckOptions{});
  EXPECT_TRUE(all_passed(r)) << format_report(r);
  int per_gen = 0;
  for (const auto& c : r)
    if (c.name.rfind("exp_closed_vs_generic_", 0) == 0) ++per_gen;
  EXPECT_EQ(per_gen, 9);
}

TEST(AlgebraCheck, CorruptionFails) {
  AlgebraCheckOptions o;
  o.constants = corrupted_constants();
  const Report r = algebra_check(o);
  EXPECT_FALSE(all_passed(r));
  for (const auto& c : r)
    if (c.name == "jacobi_exact") EXPECT_FALSE(c.passed());
}

TEST(AlgebraCheck, Deterministic) {
  AlgebraCheckOptions o;
  o.seed = 7;
  EXPECT_EQ(format_report(algebra_check(o)), format_report(algebra_check(o)));
}

TEST(Concurrency, PureFunctionsFromThreads) {
  const Mat9 ref = coadjoint_matrix(GroupParams{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}, 1.0);
  std::vector<std::thread> pool;
  std::array<bool, 8> ok{};
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&, t] {
      bool good = true;
      for (int n = 0; n < 200; ++n)
        good &= coadjoint_matrix(GroupParams{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}, 1.0) == ref;
      ok[static_cast<std::size_t>(t)] = good;
    });
  for (auto& th : pool) th.join();
  for (bool b : ok) EXPECT_TRUE(b);
}
