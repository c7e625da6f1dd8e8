#include "pmg/casimir.hpp"

#include <algorithm>
#include <cmath>

namespace pmg {

namespace {

using G = Generator;

double cross(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

}  // namespace

CasimirTriple eval_casimirs(const CoalgebraPoint& xi, double c) {
  const double c2 = c * c;
  const double B = xi[G::B], Ex = xi[G::Ex], Ey = xi[G::Ey], H = xi[G::H];
  const double Px = xi[G::Px], Py = xi[G::Py], Kx = xi[G::Kx], Ky = xi[G::Ky], J = xi[G::J];
  CasimirTriple t;
  t.c0 = Ex * Ex + Ey * Ey - c2 * B * B;
  t.c1 = H * H - c2 * (Px * Px + Py * Py) - 2.0 * (Kx * Ex + Ky * Ey - c2 * B * J);
  t.c2 = H * B + cross(Px, Py, Ex, Ey);
  return t;
}

std::array<Vec9, 3> casimir_gradients(const CoalgebraPoint& xi, double c) {
  const double c2 = c * c;
  const double B = xi[G::B], Ex = xi[G::Ex], Ey = xi[G::Ey], H = xi[G::H];
  const double Px = xi[G::Px], Py = xi[G::Py], Kx = xi[G::Kx], Ky = xi[G::Ky], J = xi[G::J];

  std::array<Vec9, 3> g;
  g[0] << -2 * c2 * B, 2 * Ex, 2 * Ey, 0, 0, 0, 0, 0, 0;
  g[1] << 2 * c2 * J, -2 * Kx, -2 * Ky, 2 * H, -2 * c2 * Px, -2 * c2 * Py, -2 * Ex, -2 * Ey, 2 * c2 * B;
  g[2] << H, -Py, Px, B, Ey, -Ex, 0, 0, 0;
  return g;
}

Eigen::Matrix<double, 3, 9> casimir_jacobian(const CoalgebraPoint& xi, double c) {
  const auto g = casimir_gradients(xi, c);
  Eigen::Matrix<double, 3, 9> j;
  for (int k = 0; k < 3; ++k) j.row(k) = g[static_cast<std::size_t>(k)].transpose();
  return j;
}

std::array<double, 3> kernel_residual(const CoalgebraPoint& xi, double c) {
  // Only the structure matrix is needed; build it once per call.
  const Mat9 m = LieAlgebra(c).lie_poisson_matrix(xi);
  const auto g = casimir_gradients(xi, c);
  return {(m * g[0]).norm(), (m * g[1]).norm(), (m * g[2]).norm()};
}

std::string_view orbit_tag_name(OrbitTag tag) {
  switch (tag) {
    case OrbitTag::TwoSheetPlus: return "TwoSheetPlus";
    case OrbitTag::TwoSheetMinus: return "TwoSheetMinus";
    case OrbitTag::ConePlus: return "ConePlus";
    case OrbitTag::ConeMinus: return "ConeMinus";
    case OrbitTag::PoincareDegenerate: return "PoincareDegenerate";
    case OrbitTag::OneSheetPlus: return "OneSheetPlus";
    case OrbitTag::OneSheetMinus: return "OneSheetMinus";
  }
  return "?";
}

double chart_epsilon(double scale) { return 1e-9 * std::max(1.0, scale); }

OrbitClass classify(const CoalgebraPoint& xi, double c, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("classification tolerance must be positive");
  OrbitClass out;
  out.casimirs = eval_casimirs(xi, c);
  const double B = xi[G::B];
  const double field_max = std::max({std::abs(B), std::abs(xi[G::Ex]), std::abs(xi[G::Ey])});
  const bool b_zero = std::abs(B) <= tol;
  out.branch = b_zero ? 0 : (B > 0 ? 1 : -1);
  out.chart_valid = !b_zero && std::abs(B) > chart_epsilon(xi.coords.cwiseAbs().maxCoeff());

  // On the B = 0 plane the tag keeps the + sign and branch 0 marks it unusable for the chart.
  const bool plus = !(B < 0.0);
  const double c0 = out.casimirs.c0;
  if (std::abs(c0) <= tol) {
    if (field_max <= tol) {
      out.tag = OrbitTag::PoincareDegenerate;
      out.branch = 0;
      out.chart_valid = false;
    } else {
      out.tag = plus ? OrbitTag::ConePlus : OrbitTag::ConeMinus;
    }
  } else if (c0 < 0.0) {
    out.tag = plus ? OrbitTag::TwoSheetPlus : OrbitTag::TwoSheetMinus;
  } else {
    out.tag = plus ? OrbitTag::OneSheetPlus : OrbitTag::OneSheetMinus;
  }
  return out;
}

OrbitChartPoint::Coords OrbitChartPoint::coords() const {
  Coords x;
  x << E, P, K;
  return x;
}

void OrbitChartPoint::set_coords(const Coords& x) {
  E = x.segment<2>(0);
  P = x.segment<2>(2);
  K = x.segment<2>(4);
}

double chart_field(const OrbitChartPoint& p, double c) {
  if (p.branch != 1 && p.branch != -1) throw ChartSingularError("chart branch must be +1 or -1");
  const double disc = p.E.squaredNorm() - p.casimirs.c0;
  if (disc < 0.0) throw DomainError("E^2 < C0: no real B on this orbit");
  const double B = p.branch * std::sqrt(disc) / c;
  if (std::abs(B) <= chart_epsilon(p.coords().cwiseAbs().maxCoeff()))
    throw ChartSingularError("|B| below chart threshold: (E, P, K) chart is singular");
  return B;
}

CoalgebraPoint chart_embed(const OrbitChartPoint& p, double c) {
  const double c2 = c * c;
  const double B = chart_field(p, c);
  const double H = (cross(p.E.x(), p.E.y(), p.P.x(), p.P.y()) + p.casimirs.c2) / B;
  const double J = (p.casimirs.c1 - H * H + c2 * p.P.squaredNorm() + 2.0 * p.K.dot(p.E)) / (2.0 * c2 * B);

  CoalgebraPoint xi;
  xi.coords << B, p.E.x(), p.E.y(), H, p.P.x(), p.P.y(), p.K.x(), p.K.y(), J;
  return xi;
}

OrbitChartPoint chart_project(const CoalgebraPoint& xi, double c) {
  const double B = xi[G::B];
  if (std::abs(B) <= chart_epsilon(xi.coords.cwiseAbs().maxCoeff()))
    throw ChartSingularError("|B| below chart threshold: point is not covered by the (E, P, K) chart");
  OrbitChartPoint p;
  p.E = {xi[G::Ex], xi[G::Ey]};
  p.P = {xi[G::Px], xi[G::Py]};
  p.K = {xi[G::Kx], xi[G::Ky]};
  p.casimirs = eval_casimirs(xi, c);
  p.branch = B > 0 ? 1 : -1;
  return p;
}

std::array<double, 3> one_sheet_field_sample(double c0, double b, double phi, double c) {
  const double r2 = c0 + c * c * b * b;  // E^2 - c^2 B^2 = C0
  if (r2 < 0.0) throw DomainError("no field point with this B on the C0 level set");
  const double r = std::sqrt(r2);
  return {b, r * std::cos(phi), r * std::sin(phi)};
}

}  // namespace pmg
