#include "pmg/orbit_dynamics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace pmg;
using G = Generator;

namespace {

OrbitChartPoint random_chart_point(std::mt19937_64& rng, double c) {
  std::uniform_real_distribution<double> u(-2, 2);
  std::uniform_real_distribution<double> bmag(0.1, 5.0);
  CoalgebraPoint xi;
  for (int i = 0; i < kDim; ++i) xi.coords[i] = u(rng);
  xi[G::B] = (u(rng) < 0 ? -1 : 1) * bmag(rng);
  return chart_project(xi, c);
}

Mat6 sub_block(const Mat9& m) {
  const int idx[6] = {slot(G::Ex), slot(G::Ey), slot(G::Px), slot(G::Py), slot(G::Kx), slot(G::Ky)};
  Mat6 out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out(i, j) = m(idx[i], idx[j]);
  return out;
}

}  // namespace

TEST(PoissonMatrix, DeterminantExample) {
  OrbitChartPoint p;
  p.E = {0.0, 0.0};
  p.casimirs.c0 = -4.0;  // B = 2 at c = 1
  EXPECT_NEAR(poisson_matrix(p, 1.0).entries.determinant(), 64.0, 64e-12);
}

TEST(PoissonMatrix, DeterminantFormula) {
  std::mt19937_64 rng(1);
  for (double c : {1.0, 2.0}) {
    for (int n = 0; n < 100; ++n) {
      const OrbitChartPoint p = random_chart_point(rng, c);
      const double B = chart_field(p, c);
      const double want = std::pow(c, 8) * std::pow(B, 6);
      EXPECT_NEAR(poisson_matrix(p, c).entries.determinant(), want, 1e-9 * want);
    }
  }
}

TEST(PoissonMatrix, IsLiePoissonSubBlock) {
  std::mt19937_64 rng(2);
  for (double c : {1.0, 2.0}) {
    LieAlgebra alg(c);
    for (int n = 0; n < 100; ++n) {
      const OrbitChartPoint p = random_chart_point(rng, c);
      const Mat6 want = sub_block(alg.lie_poisson_matrix(chart_embed(p, c)));
      EXPECT_LT((poisson_matrix(p, c).entries - want).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(SymplecticMatrix, Example) {
  OrbitChartPoint p;
  p.casimirs.c0 = -4.0;
  // 1-based (5,2)
  EXPECT_DOUBLE_EQ(symplectic_matrix(p, 1.0).entries(4, 1), 0.5);
}

TEST(SymplecticMatrix, InvertsPoissonMatrix) {
  std::mt19937_64 rng(3);
  for (double c : {1.0, 2.0}) {
    for (int n = 0; n < 200; ++n) {
      const OrbitChartPoint p = random_chart_point(rng, c);
      const Mat6 lam = poisson_matrix(p, c).entries;
      const Mat6 om = symplectic_matrix(p, c).entries;
      EXPECT_LT((om * lam - Mat6::Identity()).cwiseAbs().maxCoeff(), 1e-9);
      EXPECT_LT((om + om.transpose()).cwiseAbs().maxCoeff(), 1e-15);
      EXPECT_LT((om - lam.inverse()).cwiseAbs().maxCoeff(), 1e-8 * (1 + om.cwiseAbs().maxCoeff()));
    }
  }
}

TEST(OrbitHamiltonian, Examples) {
  OrbitChartPoint p;
  p.E = {1, 0};
  EXPECT_EQ(orbit_hamiltonian(p, 1.0), 0.0);
  p.P = {0, 1};
  EXPECT_DOUBLE_EQ(orbit_hamiltonian(p, 1.0), 1.0);
}

TEST(OrbitHamiltonian, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 50; ++n) {
    const OrbitChartPoint p = random_chart_point(rng, 1.5);
    const Vec6 g = orbit_hamiltonian_gradient(p, 1.5);
    for (int i = 0; i < 6; ++i) {
      OrbitChartPoint a = p, b = p;
      const double h = 1e-6 * (1 + std::abs(p.coords()[i]));
      auto x = p.coords();
      x[i] += h;
      a.set_coords(x);
      x[i] -= 2 * h;
      b.set_coords(x);
      const double fd = (orbit_hamiltonian(a, 1.5) - orbit_hamiltonian(b, 1.5)) / (2 * h);
      EXPECT_NEAR(g[i], fd, 1e-6 * (1 + std::abs(fd)));
    }
  }
}

TEST(OrbitVelocity, EquationsOfMotion) {
  std::mt19937_64 rng(5);
  for (double c : {1.0, 2.0}) {
    for (int n = 0; n < 100; ++n) {
      const OrbitChartPoint p = random_chart_point(rng, c);
      const Vec6 v = orbit_velocity(p, c);
      const double scale = 1 + p.coords().cwiseAbs().maxCoeff();
      EXPECT_NEAR(v[0], 0.0, 1e-12 * scale);
      EXPECT_NEAR(v[1], 0.0, 1e-12 * scale);
      EXPECT_NEAR(v[2], -p.E.x(), 1e-12 * scale);
      EXPECT_NEAR(v[3], -p.E.y(), 1e-12 * scale);
      EXPECT_NEAR(v[4], c * c * p.P.x(), 1e-11 * scale * c * c);
      EXPECT_NEAR(v[5], c * c * p.P.y(), 1e-11 * scale * c * c);
    }
  }
}

TEST(OrbitFlow, MatchesClosedFormUnitC) {
  std::mt19937_64 rng(6);
  for (int n = 0; n < 5; ++n) {
    const OrbitChartPoint p0 = random_chart_point(rng, 1.0);
    const OrbitTrajectory tr = orbit_flow(p0, 10.0, 1.0);
    ASSERT_EQ(tr.times.size(), 1000u);
    EXPECT_LT(tr.max_deviation, 1e-8);
    EXPECT_LT(tr.hamiltonian_drift, 1e-9);
    EXPECT_LT(tr.casimir_drift, 1e-9);
    // Oracle written out independently of orbit_closed_form.
    const double t = tr.times.back();
    const OrbitChartPoint& last = tr.numeric.back();
    EXPECT_NEAR(last.P.x(), p0.P.x() - p0.E.x() * t, 1e-8);
    EXPECT_NEAR(last.K.y(), p0.K.y() + p0.P.y() * t - 0.5 * p0.E.y() * t * t, 1e-8);
    EXPECT_EQ(last.E, p0.E);
  }
}

TEST(OrbitFlow, ZeroFieldGivesLinearK) {
  OrbitChartPoint p0;
  p0.casimirs.c0 = -1.0;
  p0.P = {0.5, -0.25};
  const OrbitTrajectory tr = orbit_flow(p0, 4.0, 1.0, 11);
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    EXPECT_EQ(tr.numeric[i].P, p0.P);
    EXPECT_NEAR(tr.numeric[i].K.x(), 0.5 * tr.times[i], 1e-10);
  }
}

TEST(OrbitFlow, NonUnitSpeedOfLight) {
  std::mt19937_64 rng(7);
  const OrbitChartPoint p0 = random_chart_point(rng, 2.0);
  const OrbitTrajectory tr = orbit_flow(p0, 10.0, 2.0, 200);
  const double scale = 1 + tr.closed_form.back().coords().cwiseAbs().maxCoeff();
  EXPECT_LT(tr.max_deviation / scale, 1e-10);
  EXPECT_LT(tr.hamiltonian_drift, 1e-9);
  EXPECT_LT(tr.casimir_drift, 1e-9);
}

TEST(OrbitFlow, RejectsBadArguments) {
  OrbitChartPoint p0;
  p0.casimirs.c0 = -1.0;
  EXPECT_THROW(orbit_flow(p0, 1.0, 1.0, 1), std::invalid_argument);
  EXPECT_THROW(orbit_flow(p0, -1.0, 1.0), std::invalid_argument);
  OrbitChartPoint bad;  // B = 0
  EXPECT_THROW(orbit_flow(bad, 1.0, 1.0), ChartSingularError);
}

TEST(ChartFields, ReconstructEmbedding) {
  std::mt19937_64 rng(8);
  const OrbitChartPoint p = random_chart_point(rng, 1.0);
  const ChartFields f = chart_fields(p, 1.0);
  const CoalgebraPoint xi = chart_embed(p, 1.0);
  EXPECT_EQ(f.B, xi[G::B]);
  EXPECT_EQ(f.H, xi[G::H]);
  EXPECT_EQ(f.J, xi[G::J]);
}
