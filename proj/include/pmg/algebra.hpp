#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace pmg {

using Vec9 = Eigen::Matrix<double, 9, 1>;
using Mat9 = Eigen::Matrix<double, 9, 9>;

/// Generators of the Poincare-Maxwell algebra in the fixed basis order.
/// Numbering is 1-based everywhere in the public interface.
enum class Generator : int { B = 1, Ex, Ey, H, Px, Py, Kx, Ky, J };

inline constexpr int kDim = 9;

inline constexpr std::array<Generator, kDim> kGenerators = {
    Generator::B,  Generator::Ex, Generator::Ey, Generator::H, Generator::Px,
    Generator::Py, Generator::Kx, Generator::Ky, Generator::J};

/// Zero-based storage slot of a generator.
constexpr int slot(Generator g) { return static_cast<int>(g) - 1; }

/// Generator from a 1-based index; throws std::out_of_range outside 1..9.
Generator generator_from_index(int index);

std::string_view generator_name(Generator g);

/// One nonzero structure constant: [e_i, e_j] contains coeff * c^cpow * e_k.
struct StructureTerm {
  Generator i;
  Generator j;
  Generator k;
  int coeff;
  int cpow;  // 0 or 2
};

/// Polynomial in c^2 with integer coefficients, used for exact identities.
using CPoly = std::array<std::int64_t, 3>;  // coefficients of c^0, c^2, c^4

/// Structure constants c_ij^k of PM(2+1), stored exactly.
class StructureConstants {
 public:
  /// The constants of PM(2+1).
  static StructureConstants poincare_maxwell();

  explicit StructureConstants(std::vector<StructureTerm> terms);

  std::span<const StructureTerm> terms() const { return terms_; }

  /// Exact entry c_ij^k as a polynomial in c^2.
  CPoly exact(Generator i, Generator j, Generator k) const;

  /// Floating-point entry for a given c.
  double value(int i0, int j0, int k0, double c) const;

  /// Dense tensor for a given c, index (i0*9 + j0)*9 + k0 (zero-based).
  std::vector<double> dense(double c) const;

  /// Exact antisymmetry check over all index triples.
  bool antisymmetric_exact() const;

  /// Exact Jacobi check; returns the number of (i,j,k,l) with nonzero sum.
  int jacobi_violations_exact() const;

  /// Max |Jacobi sum| over all index quadruples in floating point, divided by
  /// the largest term magnitude (1 when all terms vanish).
  double jacobi_residual(double c) const;

  /// Copy with one coefficient replaced (both orderings, sign kept antisymmetric).
  /// Used by the algebra self-check to verify it detects a broken table.
  StructureConstants corrupted(Generator i, Generator j, Generator k, int new_coeff) const;

 private:
  std::vector<StructureTerm> terms_;
  std::array<CPoly, kDim * kDim * kDim> table_{};
};

/// Element of the Lie algebra in the fixed basis.
struct AlgebraElement {
  Vec9 coeffs = Vec9::Zero();

  static AlgebraElement basis(Generator g) {
    AlgebraElement e;
    e.coeffs[slot(g)] = 1.0;
    return e;
  }
  double operator[](Generator g) const { return coeffs[slot(g)]; }
};

/// Point of the dual space in the dual basis (B, Ex, Ey, H, Px, Py, Kx, Ky, J).
struct CoalgebraPoint {
  Vec9 coords = Vec9::Zero();

  double& operator[](Generator g) { return coords[slot(g)]; }
  double operator[](Generator g) const { return coords[slot(g)]; }
};

/// Parameters of g = e^{bB} e^{dx Ex} e^{dy Ey} e^{tau H} e^{ax Px} e^{ay Py}
/// e^{nx Kx} e^{ny Ky} e^{phi J}.
struct GroupParams {
  double b = 0, dx = 0, dy = 0, tau = 0, ax = 0, ay = 0, nx = 0, ny = 0, phi = 0;

  /// Parameter attached to a generator.
  double operator[](Generator g) const;
  double& operator[](Generator g);
};

/// Lie algebra of PM(2+1) at a fixed value of the speed of light.
class LieAlgebra {
 public:
  explicit LieAlgebra(double c = 1.0);
  LieAlgebra(const StructureConstants& constants, double c);

  double c() const { return c_; }

  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

  /// Matrix of ad_{e_i}: entry (k, j) = c_ij^k, so ad(i) * Y = [e_i, Y].
  const Mat9& ad_matrix(Generator g) const { return ad_[slot(g)]; }
  /// 1-based overload; throws std::out_of_range.
  const Mat9& ad_matrix(int index) const { return ad_matrix(generator_from_index(index)); }

  /// Lie-Poisson structure matrix M_ij(xi) = c_ij^k xi_k.
  Mat9 lie_poisson_matrix(const CoalgebraPoint& xi) const;

 private:
  double c_;
  std::vector<double> tensor_;
  std::array<Mat9, kDim> ad_;
};

/// Closed-form exp(s * ad_matrix(g)) for speed of light c.
Mat9 exp_ad_closed(Generator g, double s, double c);

/// General matrix exponential by scaling and squaring around a Taylor core.
/// Throws std::overflow_error when the result is not finite.
Mat9 exp_matrix_generic(const Mat9& m);

/// Coadjoint matrix e^{-phi ad_J} e^{-ny ad_Ky} ... e^{-b ad_B}.  It acts on
/// coordinate row vectors: coad_apply(g, xi) = xi^T * M.
Mat9 coadjoint_matrix(const GroupParams& g, double c);

CoalgebraPoint coad_apply(const GroupParams& g, const CoalgebraPoint& xi, double c);

}  // namespace pmg
