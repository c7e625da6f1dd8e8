#pragma once

#include "pmg/algebra.hpp"

#include <stdexcept>
#include <string_view>

namespace pmg {

/// Raised when a point lies outside the domain of an orbit chart formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when B is (numerically) zero and the (E, P, K) chart is singular.
class ChartSingularError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct CasimirTriple {
  double c0 = 0;  // E^2 - c^2 B^2
  double c1 = 0;  // H^2 - c^2 P^2 - 2 (K.E - c^2 B J)
  double c2 = 0;  // H B + P x E
};

CasimirTriple eval_casimirs(const CoalgebraPoint& xi, double c);

/// Analytic gradients of C0, C1, C2 with respect to the nine coordinates.
std::array<Vec9, 3> casimir_gradients(const CoalgebraPoint& xi, double c);

/// Norms |M(xi) grad C_k| for k = 0, 1, 2.
std::array<double, 3> kernel_residual(const CoalgebraPoint& xi, double c);

/// Orbit type from the sign of C0 and of B.
enum class OrbitTag {
  TwoSheetPlus,
  TwoSheetMinus,
  ConePlus,
  ConeMinus,
  PoincareDegenerate,
  OneSheetPlus,
  OneSheetMinus,
  /// Non-degenerate point on the B = 0 plane; classified but not chartable.
};

std::string_view orbit_tag_name(OrbitTag tag);

struct OrbitClass {
  OrbitTag tag = OrbitTag::PoincareDegenerate;
  CasimirTriple casimirs;
  int branch = 0;  // sign of B, 0 on the B = 0 plane
  bool chart_valid = false;
};

inline constexpr double kDefaultClassifyTol = 1e-9;

OrbitClass classify(const CoalgebraPoint& xi, double c, double tol = kDefaultClassifyTol);

/// Chart coordinates (E, P, K) on a fixed orbit, plus the orbit labels.
struct OrbitChartPoint {
  Eigen::Vector2d E = Eigen::Vector2d::Zero();
  Eigen::Vector2d P = Eigen::Vector2d::Zero();
  Eigen::Vector2d K = Eigen::Vector2d::Zero();
  CasimirTriple casimirs;
  int branch = 1;

  using Coords = Eigen::Matrix<double, 6, 1>;
  /// Chart coordinates in the order (Ex, Ey, Px, Py, Kx, Ky).
  Coords coords() const;
  void set_coords(const Coords& x);
};

/// Threshold below which |B| counts as zero for a point of this magnitude.
double chart_epsilon(double scale);

/// B(E) = branch * sqrt(E^2 - C0) / c.  Throws DomainError / ChartSingularError.
double chart_field(const OrbitChartPoint& p, double c);

/// Reconstructs (B, H, J) and assembles the coalgebra point.
CoalgebraPoint chart_embed(const OrbitChartPoint& p, double c);

/// Reads (E, P, K), the Casimirs and the branch off a coalgebra point.
OrbitChartPoint chart_project(const CoalgebraPoint& xi, double c);

/// 3x9 Jacobian of (C0, C1, C2); rank 3 wherever B != 0.
Eigen::Matrix<double, 3, 9> casimir_jacobian(const CoalgebraPoint& xi, double c);

/// Field-space point on the level set C0: (B, E) = (b, sqrt(C0 + c^2 b^2)(cos phi, sin phi)).
/// Throws DomainError when C0 + c^2 b^2 < 0.
std::array<double, 3> one_sheet_field_sample(double c0, double b, double phi, double c);

}  // namespace pmg
