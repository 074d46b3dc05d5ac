#include "linkforge/bonds.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace linkforge {

namespace {

constexpr int kMaxDegree = 40;

Poly trimmed(const Poly& p) {
  double m = 0;
  for (double c : p) m = std::max(m, std::abs(c));
  Poly out = p;
  while (!out.empty() && std::abs(out.back()) <= 1e-13 * std::max(1.0, m)) out.pop_back();
  return out;
}

}  // namespace

std::complex<double> poly_eval(const Poly& p, std::complex<double> u) {
  std::complex<double> v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * u + *it;
  return v;
}

int poly_degree(const Poly& p) { return static_cast<int>(trimmed(p).size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0.0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Poly poly_derivative(const Poly& p) {
  Poly out;
  for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<double>(i));
  return out;
}

std::vector<std::complex<double>> poly_roots(const Poly& p) {
  Poly q = trimmed(p);
  int deg = static_cast<int>(q.size()) - 1;
  if (deg > kMaxDegree) throw std::invalid_argument("poly_roots: degree exceeds guard (40)");
  if (deg < 1) return {};
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) C(i, deg - 1) = -q[i] / q[deg];
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("poly_roots: eigensolver failed");
  std::vector<std::complex<double>> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()[i];
  return roots;
}

Configuration ConfigCurve::at(double u) const {
  Configuration c;
  c.joints.resize(linkage.joints.size());
  for (int k = 0; k < linkage.size(); ++k) {
    std::complex<double> a = poly_eval(joints[k].a, u), b = poly_eval(joints[k].b, u);
    if (linkage.joints[k].kind == JointKind::Revolute) {
      double n = std::hypot(a.real(), b.real());
      if (n == 0.0) throw std::runtime_error("curve evaluation: pair (0:0)");
      c.joints[k].t0 = a.real() / n;
      c.joints[k].t1 = b.real() / n;
    } else if (linkage.joints[k].kind == JointKind::Prismatic) {
      if (std::abs(b.real()) < 1e-14 * (1 + std::abs(a.real())))
        throw std::runtime_error("curve evaluation: P-joint pole");
      c.joints[k].s = a.real() / b.real();
    } else {
      throw std::invalid_argument("config curves support R and P joints only");
    }
  }
  return c;
}

void ConfigCurve::validate(double tol, int samples) const {
  if (static_cast<int>(joints.size()) != linkage.size())
    throw std::invalid_argument("config curve: per-joint data size mismatch");
  for (const auto& j : linkage.joints)
    if (j.kind != JointKind::Revolute && j.kind != JointKind::Prismatic)
      throw std::invalid_argument("config curves support R and P joints only");
  double worst = 0;
  int used = 0;
  for (int i = 0; i < samples; ++i) {
    // spread over a wide range, including large parameters
    double u = std::tan(M_PI * (static_cast<double>(i + 1) / (samples + 1) - 0.5)) * 2.0;
    Configuration c;
    try {
      c = at(u);
    } catch (const std::runtime_error&) {
      continue;  // pole; skip the sample
    }
    ++used;
    worst = std::max(worst, closure_residual(linkage, c).norm());
  }
  if (used < samples / 2)
    throw CurveClosureError("config curve: too many samples hit poles", worst);
  if (worst > tol)
    throw CurveClosureError(
        "config curve does not satisfy closure on sampled points (worst residual " +
            std::to_string(worst) + ")",
        worst);
}

namespace {

using C = std::complex<double>;

CDQ complex_factor(const Joint& j, C a, C b) {
  // R: t0 - t1 h ; P: den - eps num p (projectively 1 - eps s p)
  CDQ m;
  if (j.kind == JointKind::Revolute) {
    CDQ h = dq_cast<C>(j.axis.to_dq());
    m = a * CDQ::one() - b * h;
  } else {
    m = b * CDQ::one();
    m.d = -a * Quaternion<C>(C(0), C(j.direction.x()), C(j.direction.y()), C(j.direction.z()));
  }
  return m;
}

double max_coord(const CDQ& m) {
  double v = 0;
  for (int i = 0; i < 8; ++i) v = std::max(v, std::abs(m.coeff(i)));
  return v;
}

CDQ normalized(const CDQ& m) {
  double v = max_coord(m);
  if (v == 0.0) return m;
  return (C(1.0 / v)) * m;
}

// Homogeneous pair value at u (finite) or at infinity via leading
// coefficients of the degree-matched homogenization.
std::pair<C, C> pair_value(const JointCurve& jc, C u, bool at_inf) {
  if (!at_inf) return {poly_eval(jc.a, u), poly_eval(jc.b, u)};
  int d = std::max(poly_degree(jc.a), poly_degree(jc.b));
  if (d < 0) return {C(0), C(0)};
  auto lead = [&](const Poly& p) {
    return static_cast<int>(p.size()) > d ? C(p[d]) : C(0);
  };
  return {lead(jc.a), lead(jc.b)};
}

Bond make_bond(const ConfigCurve& curve, C u, bool at_inf) {
  Bond b;
  b.u = u;
  b.at_infinity = at_inf;
  int n = curve.linkage.size();
  b.coords.resize(n);
  b.factors.resize(n);
  for (int k = 0; k < n; ++k) {
    auto [pa, pb] = pair_value(curve.joints[k], u, at_inf);
    double scale = std::max(std::abs(pa), std::abs(pb));
    if (scale > 0) {
      pa /= scale;
      pb /= scale;
    }
    b.coords[k] = {pa, pb};
    b.factors[k] = normalized(complex_factor(curve.linkage.joints[k], pa, pb));
  }
  return b;
}

bool factor_attached(const CDQ& m, double tol) { return std::abs(m.p.squared()) <= tol; }

bool product_vanishes(const std::vector<CDQ>& factors, int from, int count, double tol) {
  CDQ prod = CDQ::one();
  int n = static_cast<int>(factors.size());
  for (int i = 0; i < count; ++i) prod = prod * factors[(from + i) % n];
  return max_coord(prod) <= tol;
}

}  // namespace

bool Bond::coordinate_infinite(int k, double tol) const {
  return std::abs(coords[k].second) <= tol * std::max(1.0, std::abs(coords[k].first));
}

std::complex<double> Bond::coordinate(int k) const { return coords[k].first / coords[k].second; }

std::vector<Bond> find_bonds(const ConfigCurve& curve, double tol) {
  curve.validate(tol);
  int n = curve.linkage.size();

  std::vector<C> candidates;
  for (int k = 0; k < n; ++k) {
    const auto& jc = curve.joints[k];
    if (curve.linkage.joints[k].kind == JointKind::Revolute) {
      Poly norm_poly = poly_add(poly_mul(jc.a, jc.a), poly_mul(jc.b, jc.b));
      for (auto r : poly_roots(norm_poly)) candidates.push_back(r);
    } else {
      for (auto r : poly_roots(jc.b)) candidates.push_back(r);
    }
  }

  // cluster duplicates
  std::vector<C> merged;
  for (auto c : candidates) {
    bool dup = false;
    for (auto m : merged)
      if (std::abs(c - m) <= 1e-8 * std::max(1.0, std::abs(m))) {
        dup = true;
        break;
      }
    if (!dup) merged.push_back(c);
  }
  std::sort(merged.begin(), merged.end(), [](C a, C b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  std::vector<Bond> bonds;
  auto consider = [&](C u, bool at_inf) {
    Bond b = make_bond(curve, u, at_inf);
    for (int k = 0; k < n; ++k)
      if (factor_attached(b.factors[k], tol)) b.attached.push_back(k);
    if (b.attached.empty()) return;
    if (!product_vanishes(b.factors, 0, n, tol)) return;
    bonds.push_back(std::move(b));
  };
  for (auto u : merged) consider(u, false);
  consider(C(0), true);  // the point at infinity of the parameter line
  return bonds;
}

bool connects(const Bond& b, int k, int l, double tol) {
  int n = static_cast<int>(b.factors.size());
  if (k == l) return false;
  int fwd = (l - k + n) % n + 1;   // joints k..l inclusive
  int bwd = (k - l + n) % n + 1;   // joints l..k inclusive
  return product_vanishes(b.factors, k, fwd, tol) && product_vanishes(b.factors, l, bwd, tol);
}

BondDiagram bond_diagram(const ConfigCurve& curve, double tol) {
  BondDiagram d;
  d.n_joints = curve.linkage.size();
  d.bonds = find_bonds(curve, tol);
  d.per_bond_connections.resize(d.bonds.size());
  for (size_t bi = 0; bi < d.bonds.size(); ++bi) {
    const Bond& b = d.bonds[bi];
    for (size_t i = 0; i < b.attached.size(); ++i)
      for (size_t j = i + 1; j < b.attached.size(); ++j) {
        int k = b.attached[i], l = b.attached[j];
        if (connects(b, k, l, tol)) {
          d.per_bond_connections[bi].push_back({k, l});
          if (std::find(d.connections.begin(), d.connections.end(), std::make_pair(k, l)) ==
              d.connections.end())
            d.connections.push_back({k, l});
        }
      }
  }
  std::sort(d.connections.begin(), d.connections.end());

  for (int k = 0; k < d.n_joints; ++k) {
    const auto& jc = curve.joints[k];
    // the Wronskian a b' - a' b vanishes identically iff (a : b) is constant
    Poly wron = poly_add(poly_mul(jc.a, poly_derivative(jc.b)),
                         poly_mul({-1}, poly_mul(poly_derivative(jc.a), jc.b)));
    if (poly_degree(wron) < 0) continue;
    bool attached = false;
    for (const auto& b : d.bonds)
      if (std::find(b.attached.begin(), b.attached.end(), k) != b.attached.end()) attached = true;
    if (!attached) d.moving_unattached.push_back(k);
  }
  return d;
}

}  // namespace linkforge
