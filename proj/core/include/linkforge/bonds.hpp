#pragma once

// Bonds for R/P linkages whose configuration curve is given as a rational
// parametrization over the complex numbers. Bond parameters are the points
// of P^1 where some joint motion's norm vanishes (t = +-i for rotations,
// poles of s for prismatic joints) and the full product of motions
// degenerates to zero.

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linkforge/linkage.hpp"

namespace linkforge {

// Real-coefficient polynomial, ascending powers.
using Poly = std::vector<double>;

std::complex<double> poly_eval(const Poly& p, std::complex<double> u);
int poly_degree(const Poly& p);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_derivative(const Poly& p);
// Companion-matrix eigenvalues; throws beyond degree 40.
std::vector<std::complex<double>> poly_roots(const Poly& p);

// R-joints carry a homogeneous pair (t0(u) : t1(u)); P-joints a rational
// s(u) = num(u) / den(u).
struct JointCurve {
  Poly a;  // R: t0, P: numerator
  Poly b;  // R: t1, P: denominator
};

struct CurveClosureError : std::runtime_error {
  double worst_residual;
  CurveClosureError(const std::string& what, double worst)
      : std::runtime_error(what), worst_residual(worst) {}
};

struct ConfigCurve {
  Linkage linkage;
  std::vector<JointCurve> joints;

  // Real evaluation; throws at poles of a P-joint.
  Configuration at(double u) const;
  // Sampled closure check over real parameter values; throws
  // CurveClosureError when any sample exceeds tol.
  void validate(double tol = 1e-9, int samples = 33) const;
};

struct Bond {
  std::complex<double> u;
  bool at_infinity = false;
  // Homogeneous complex coordinate per joint: R: (t0, t1), P: (num, den).
  std::vector<std::pair<std::complex<double>, std::complex<double>>> coords;
  std::vector<int> attached;
  // Max-normalized motion factors at the bond parameter (internal, used for
  // connection tests).
  std::vector<CDQ> factors;

  bool coordinate_infinite(int k, double tol = 1e-9) const;
  std::complex<double> coordinate(int k) const;  // affine value t or s
};

std::vector<Bond> find_bonds(const ConfigCurve& curve, double tol = 1e-9);

// True iff both cyclic partial products m_k ... m_l and m_l ... m_k vanish.
bool connects(const Bond& b, int k, int l, double tol = 1e-9);

struct BondDiagram {
  int n_joints = 0;
  std::vector<Bond> bonds;
  std::vector<std::pair<int, int>> connections;
  std::vector<std::vector<std::pair<int, int>>> per_bond_connections;
  // Joints whose curve coordinate actually varies but which no bond touches;
  // such a joint contradicts bond fact (iii) and is flagged, not fatal.
  std::vector<int> moving_unattached;
};

BondDiagram bond_diagram(const ConfigCurve& curve, double tol = 1e-9);

}  // namespace linkforge
