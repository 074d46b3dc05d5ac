#pragma once

// Minimal forward-mode scalar: value plus one directional derivative.
// Used to differentiate closure residuals through the dual quaternion
// algebra one chart direction at a time.

#include <cmath>

namespace linkforge {

struct Jet {
  double v = 0;  // value
  double d = 0;  // derivative

  Jet() = default;
  Jet(double value) : v(value) {}
  Jet(double value, double deriv) : v(value), d(deriv) {}

  friend Jet operator+(const Jet& a, const Jet& b) { return {a.v + b.v, a.d + b.d}; }
  friend Jet operator-(const Jet& a, const Jet& b) { return {a.v - b.v, a.d - b.d}; }
  friend Jet operator-(const Jet& a) { return {-a.v, -a.d}; }
  friend Jet operator*(const Jet& a, const Jet& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
  friend Jet operator/(const Jet& a, const Jet& b) {
    double inv = 1.0 / b.v;
    return {a.v * inv, (a.d - a.v * b.d * inv) * inv};
  }

  Jet& operator+=(const Jet& o) { v += o.v; d += o.d; return *this; }
  Jet& operator-=(const Jet& o) { v -= o.v; d -= o.d; return *this; }
};

inline Jet sin(const Jet& a) { return {std::sin(a.v), std::cos(a.v) * a.d}; }
inline Jet cos(const Jet& a) { return {std::cos(a.v), -std::sin(a.v) * a.d}; }
inline Jet sqrt(const Jet& a) {
  double r = std::sqrt(a.v);
  return {r, 0.5 * a.d / r};
}
inline double value_of(const Jet& a) { return a.v; }
inline double value_of(double a) { return a; }

}  // namespace linkforge
