#pragma once

#include <Eigen/Dense>

#include <cmath>

namespace pmg {

/// Forward-mode dual number carrying N partial derivatives.
template <int N>
struct Jet {
  using Tangent = Eigen::Matrix<double, N, 1>;

  double v = 0.0;
  Tangent d = Tangent::Zero();

  Jet() = default;
  Jet(double value) : v(value) {}  // NOLINT(google-explicit-constructor)
  Jet(double value, const Tangent& tangent) : v(value), d(tangent) {}

  static Jet variable(double value, int index) {
    Jet j(value);
    j.d[index] = 1.0;
    return j;
  }

  Jet& operator+=(const Jet& o) { v += o.v; d += o.d; return *this; }
  Jet& operator-=(const Jet& o) { v -= o.v; d -= o.d; return *this; }
  Jet& operator*=(const Jet& o) { d = d * o.v + o.d * v; v *= o.v; return *this; }
  Jet& operator/=(const Jet& o) {
    const double inv = 1.0 / o.v;
    d = (d - o.d * (v * inv)) * inv;
    v *= inv;
    return *this;
  }
};

template <int N> Jet<N> operator-(const Jet<N>& a) { return {-a.v, -a.d}; }
template <int N> Jet<N> operator+(Jet<N> a, const Jet<N>& b) { return a += b; }
template <int N> Jet<N> operator-(Jet<N> a, const Jet<N>& b) { return a -= b; }
template <int N> Jet<N> operator*(Jet<N> a, const Jet<N>& b) { return a *= b; }
template <int N> Jet<N> operator/(Jet<N> a, const Jet<N>& b) { return a /= b; }

template <int N> Jet<N> operator+(Jet<N> a, double b) { a.v += b; return a; }
template <int N> Jet<N> operator+(double a, Jet<N> b) { b.v += a; return b; }
template <int N> Jet<N> operator-(Jet<N> a, double b) { a.v -= b; return a; }
template <int N> Jet<N> operator-(double a, const Jet<N>& b) { return {a - b.v, -b.d}; }
template <int N> Jet<N> operator*(Jet<N> a, double b) { a.v *= b; a.d *= b; return a; }
template <int N> Jet<N> operator*(double a, Jet<N> b) { b.v *= a; b.d *= a; return b; }
template <int N> Jet<N> operator/(Jet<N> a, double b) { a.v /= b; a.d /= b; return a; }

template <int N>
Jet<N> sqrt(const Jet<N>& a) {
  const double r = std::sqrt(a.v);
  return {r, a.d * (0.5 / r)};
}

}  // namespace pmg
