#include "pmg/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pmg {

namespace {

constexpr int flat(int i0, int j0, int k0) { return (i0 * kDim + j0) * kDim + k0; }

CPoly term_poly(int coeff, int cpow) {
  CPoly p{};
  p[static_cast<std::size_t>(cpow / 2)] = coeff;
  return p;
}

CPoly mul(const CPoly& a, const CPoly& b) {
  // Inputs of the table never exceed degree 1 in c^2.
  CPoly r{};
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = 0; u + v < 3; ++v) r[u + v] += a[u] * b[v];
  return r;
}

bool is_zero(const CPoly& p) { return p[0] == 0 && p[1] == 0 && p[2] == 0; }

double eval(const CPoly& p, double c2) { return double(p[0]) + c2 * (double(p[1]) + c2 * double(p[2])); }

}  // namespace

Generator generator_from_index(int index) {
  if (index < 1 || index > kDim)
    throw std::out_of_range("generator index " + std::to_string(index) + " outside 1..9");
  return static_cast<Generator>(index);
}

std::string_view generator_name(Generator g) {
  static constexpr std::array<std::string_view, kDim> names = {"B",  "Ex", "Ey", "H", "Px",
                                                               "Py", "Kx", "Ky", "J"};
  return names[static_cast<std::size_t>(slot(g))];
}

// ---------------------------------------------------------------------------

StructureConstants StructureConstants::poincare_maxwell() {
  using G = Generator;
  // Non-vanishing brackets [i, j] = coeff * c^cpow * k with i before j; the
  // antisymmetric partners are added by the constructor.
  return StructureConstants({
      {G::H, G::Kx, G::Px, -1, 2},  {G::H, G::Ky, G::Py, -1, 2},
      {G::B, G::Kx, G::Ey, 1, 0},   {G::B, G::Ky, G::Ex, -1, 0},
      {G::Px, G::Kx, G::H, -1, 0},  {G::Py, G::Ky, G::H, -1, 0},
      {G::H, G::Px, G::Ex, 1, 0},   {G::H, G::Py, G::Ey, 1, 0},
      {G::Kx, G::Ky, G::J, -1, 2},  {G::Ex, G::Ky, G::B, -1, 2},
      {G::Ey, G::Kx, G::B, 1, 2},   {G::Px, G::J, G::Py, -1, 0},
      {G::Py, G::J, G::Px, 1, 0},   {G::Px, G::Py, G::B, -1, 0},
      {G::Kx, G::J, G::Ky, -1, 0},  {G::Ky, G::J, G::Kx, 1, 0},
      {G::Ex, G::J, G::Ey, -1, 0},  {G::Ey, G::J, G::Ex, 1, 0},
  });
}

StructureConstants::StructureConstants(std::vector<StructureTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.cpow != 0 && t.cpow != 2) throw std::invalid_argument("structure constant power of c must be 0 or 2");
    if (t.i == t.j) throw std::invalid_argument("structure constant with i == j");
    const CPoly p = term_poly(t.coeff, t.cpow);
    const CPoly m = term_poly(-t.coeff, t.cpow);
    table_[flat(slot(t.i), slot(t.j), slot(t.k))] = p;
    table_[flat(slot(t.j), slot(t.i), slot(t.k))] = m;
  }
}

CPoly StructureConstants::exact(Generator i, Generator j, Generator k) const {
  return table_[flat(slot(i), slot(j), slot(k))];
}

double StructureConstants::value(int i0, int j0, int k0, double c) const {
  return eval(table_[flat(i0, j0, k0)], c * c);
}

std::vector<double> StructureConstants::dense(double c) const {
  std::vector<double> out(table_.size());
  const double c2 = c * c;
  std::transform(table_.begin(), table_.end(), out.begin(), [c2](const CPoly& p) { return eval(p, c2); });
  return out;
}

bool StructureConstants::antisymmetric_exact() const {
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        const CPoly& a = table_[flat(i, j, k)];
        const CPoly& b = table_[flat(j, i, k)];
        for (std::size_t u = 0; u < 3; ++u)
          if (a[u] != -b[u]) return false;
      }
  return true;
}

int StructureConstants::jacobi_violations_exact() const {
  int violations = 0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l) {
          CPoly sum{};
          for (int m = 0; m < kDim; ++m) {
            const CPoly t1 = mul(table_[flat(i, j, m)], table_[flat(m, k, l)]);
            const CPoly t2 = mul(table_[flat(j, k, m)], table_[flat(m, i, l)]);
            const CPoly t3 = mul(table_[flat(k, i, m)], table_[flat(m, j, l)]);
            for (std::size_t u = 0; u < 3; ++u) sum[u] += t1[u] + t2[u] + t3[u];
          }
          if (!is_zero(sum)) ++violations;
        }
  return violations;
}

double StructureConstants::jacobi_residual(double c) const {
  const auto t = dense(c);
  double worst = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l) {
          double sum = 0.0;
          double scale = 0.0;
          for (int m = 0; m < kDim; ++m) {
            const double t1 = t[flat(i, j, m)] * t[flat(m, k, l)];
            const double t2 = t[flat(j, k, m)] * t[flat(m, i, l)];
            const double t3 = t[flat(k, i, m)] * t[flat(m, j, l)];
            sum += t1 + t2 + t3;
            scale = std::max({scale, std::abs(t1), std::abs(t2), std::abs(t3)});
          }
          worst = std::max(worst, std::abs(sum) / std::max(scale, 1.0));
        }
  return worst;
}

StructureConstants StructureConstants::corrupted(Generator i, Generator j, Generator k, int new_coeff) const {
  std::vector<StructureTerm> terms = terms_;
  bool found = false;
  for (auto& t : terms) {
    if (t.i == i && t.j == j && t.k == k) {
      t.coeff = new_coeff;
      found = true;
    }
  }
  if (!found) terms.push_back({i, j, k, new_coeff, 0});
  return StructureConstants(std::move(terms));
}

// ---------------------------------------------------------------------------

double GroupParams::operator[](Generator g) const {
  return const_cast<GroupParams&>(*this)[g];
}

double& GroupParams::operator[](Generator g) {
  switch (g) {
    case Generator::B: return b;
    case Generator::Ex: return dx;
    case Generator::Ey: return dy;
    case Generator::H: return tau;
    case Generator::Px: return ax;
    case Generator::Py: return ay;
    case Generator::Kx: return nx;
    case Generator::Ky: return ny;
    case Generator::J: return phi;
  }
  throw std::out_of_range("unknown generator");
}

// ---------------------------------------------------------------------------

LieAlgebra::LieAlgebra(double c) : LieAlgebra(StructureConstants::poincare_maxwell(), c) {}

LieAlgebra::LieAlgebra(const StructureConstants& constants, double c) : c_(c), tensor_(constants.dense(c)) {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("speed of light must be positive and finite");
  for (int i = 0; i < kDim; ++i) {
    Mat9 m = Mat9::Zero();
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) m(k, j) = tensor_[flat(i, j, k)];
    ad_[static_cast<std::size_t>(i)] = m;
  }
}

AlgebraElement LieAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement z;
  for (int i = 0; i < kDim; ++i) {
    if (x.coeffs[i] == 0.0) continue;
    z.coeffs += x.coeffs[i] * (ad_[static_cast<std::size_t>(i)] * y.coeffs);
  }
  return z;
}

Mat9 LieAlgebra::lie_poisson_matrix(const CoalgebraPoint& xi) const {
  Mat9 m = Mat9::Zero();
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      double s = 0.0;
      for (int k = 0; k < kDim; ++k) s += tensor_[flat(i, j, k)] * xi.coords[k];
      m(i, j) = s;
    }
  return m;
}

// ---------------------------------------------------------------------------

Mat9 exp_ad_closed(Generator g, double s, double c) {
  Mat9 m = Mat9::Identity();
  const double c2 = c * c;
  switch (g) {
    case Generator::B:
      m(1, 7) = -s;
      m(2, 6) = s;
      break;
    case Generator::Ex:
      m(0, 7) = -c2 * s;
      m(2, 8) = -s;
      break;
    case Generator::Ey:
      m(0, 6) = c2 * s;
      m(1, 8) = s;
      break;
    case Generator::H:
      m(1, 4) = s;
      m(1, 6) = -c2 * s * s / 2;
      m(2, 5) = s;
      m(2, 7) = -c2 * s * s / 2;
      m(4, 6) = -c2 * s;
      m(5, 7) = -c2 * s;
      break;
    case Generator::Px:
      m(0, 5) = -s;
      m(0, 8) = s * s / 2;
      m(1, 3) = -s;
      m(1, 6) = s * s / 2;
      m(3, 6) = -s;
      m(5, 8) = -s;
      break;
    case Generator::Py:
      m(0, 4) = s;
      m(0, 8) = s * s / 2;
      m(2, 3) = -s;
      m(2, 7) = s * s / 2;
      m(3, 7) = -s;
      m(4, 8) = s;
      break;
    case Generator::Kx: {
      const double ch = std::cosh(c * s);
      const double sh = std::sinh(c * s);
      m(0, 0) = ch;
      m(0, 2) = -c * sh;
      m(2, 0) = -sh / c;
      m(2, 2) = ch;
      m(3, 3) = ch;
      m(3, 4) = sh / c;
      m(4, 3) = c * sh;
      m(4, 4) = ch;
      m(7, 7) = ch;
      m(7, 8) = -sh / c;
      m(8, 7) = -c * sh;
      m(8, 8) = ch;
      break;
    }
    case Generator::Ky: {
      const double ch = std::cosh(c * s);
      const double sh = std::sinh(c * s);
      m(0, 0) = ch;
      m(0, 1) = c * sh;
      m(1, 0) = sh / c;
      m(1, 1) = ch;
      m(3, 3) = ch;
      m(3, 5) = sh / c;
      m(5, 3) = c * sh;
      m(5, 5) = ch;
      m(6, 6) = ch;
      m(6, 8) = sh / c;
      m(8, 6) = c * sh;
      m(8, 8) = ch;
      break;
    }
    case Generator::J: {
      const double co = std::cos(s);
      const double si = std::sin(s);
      for (int b : {1, 4, 6}) {
        m(b, b) = co;
        m(b, b + 1) = -si;
        m(b + 1, b) = si;
        m(b + 1, b + 1) = co;
      }
      break;
    }
  }
  return m;
}

Mat9 exp_matrix_generic(const Mat9& m) {
  if (!m.allFinite()) throw std::overflow_error("matrix exponential of non-finite matrix");
  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  if (squarings > 1000) throw std::overflow_error("matrix exponential: norm too large");
  const Mat9 a = m / std::ldexp(1.0, squarings);

  Mat9 sum = Mat9::Identity();
  Mat9 term = Mat9::Identity();
  for (int n = 1; n < 64; ++n) {
    term = (term * a) / static_cast<double>(n);
    sum += term;
    if (term.cwiseAbs().maxCoeff() <= 1e-18 * sum.cwiseAbs().maxCoeff()) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  if (!sum.allFinite()) throw std::overflow_error("matrix exponential overflowed");
  return sum;
}

Mat9 coadjoint_matrix(const GroupParams& g, double c) {
  Mat9 m = Mat9::Identity();
  for (auto it = kGenerators.rbegin(); it != kGenerators.rend(); ++it) {
    const double p = g[*it];
    if (p != 0.0) m = m * exp_ad_closed(*it, -p, c);
  }
  return m;
}

CoalgebraPoint coad_apply(const GroupParams& g, const CoalgebraPoint& xi, double c) {
  CoalgebraPoint out;
  out.coords = coadjoint_matrix(g, c).transpose() * xi.coords;
  return out;
}

}  // namespace pmg
