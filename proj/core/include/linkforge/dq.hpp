#pragma once

// Quaternion, dual number and dual quaternion arithmetic over an arbitrary
// scalar ring (double, std::complex<double>, forward-mode jets).  The algebra
// is formal: quaternion conjugation negates vector parts and never touches
// the scalar type, so the complexified algebra comes out right.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace linkforge {

using Vec3 = Eigen::Vector3d;
using Point3 = Eigen::Vector3d;

template <typename T>
struct Quaternion {
  T w{}, x{}, y{}, z{};

  Quaternion() = default;
  Quaternion(T w_, T x_, T y_, T z_) : w(w_), x(x_), y(y_), z(z_) {}

  static Quaternion scalar(T s) { return {s, T{}, T{}, T{}}; }
  static Quaternion vector(T x_, T y_, T z_) { return {T{}, x_, y_, z_}; }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend Quaternion operator*(const T& s, const Quaternion& a) {
    return {s * a.w, s * a.x, s * a.y, s * a.z};
  }
  friend Quaternion operator*(const Quaternion& a, const T& s) { return s * a; }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y + a.y * b.w + a.z * b.x - a.x * b.z,
            a.w * b.z + a.z * b.w + a.x * b.y - a.y * b.x};
  }

  Quaternion conj() const { return {w, -x, -y, -z}; }

  // Sum of squared coordinates; over C this is the formal (holomorphic) norm.
  T squared() const { return w * w + x * x + y * y + z * z; }
};

template <typename T>
struct DualNumber {
  T re{}, du{};

  DualNumber() = default;
  DualNumber(T re_, T du_) : re(re_), du(du_) {}

  friend DualNumber operator+(const DualNumber& a, const DualNumber& b) {
    return {a.re + b.re, a.du + b.du};
  }
  friend DualNumber operator-(const DualNumber& a, const DualNumber& b) {
    return {a.re - b.re, a.du - b.du};
  }
  friend DualNumber operator*(const DualNumber& a, const DualNumber& b) {
    return {a.re * b.re, a.re * b.du + a.du * b.re};
  }
};

// h = A + eps B with primal A and dual B.
template <typename T>
struct DualQuaternion {
  Quaternion<T> p;  // primal
  Quaternion<T> d;  // dual

  DualQuaternion() = default;
  DualQuaternion(const Quaternion<T>& primal, const Quaternion<T>& dual) : p(primal), d(dual) {}

  static DualQuaternion one() { return {Quaternion<T>::scalar(T(1)), {}}; }

  T coeff(int i) const {
    switch (i) {
      case 0: return p.w;
      case 1: return p.x;
      case 2: return p.y;
      case 3: return p.z;
      case 4: return d.w;
      case 5: return d.x;
      case 6: return d.y;
      default: return d.z;
    }
  }
  void set_coeff(int i, T v) {
    switch (i) {
      case 0: p.w = v; break;
      case 1: p.x = v; break;
      case 2: p.y = v; break;
      case 3: p.z = v; break;
      case 4: d.w = v; break;
      case 5: d.x = v; break;
      case 6: d.y = v; break;
      default: d.z = v; break;
    }
  }

  friend DualQuaternion operator+(const DualQuaternion& a, const DualQuaternion& b) {
    return {a.p + b.p, a.d + b.d};
  }
  friend DualQuaternion operator-(const DualQuaternion& a, const DualQuaternion& b) {
    return {a.p - b.p, a.d - b.d};
  }
  friend DualQuaternion operator-(const DualQuaternion& a) { return {-a.p, -a.d}; }
  friend DualQuaternion operator*(const T& s, const DualQuaternion& a) {
    return {s * a.p, s * a.d};
  }
  friend DualQuaternion operator*(const DualQuaternion& a, const T& s) { return s * a; }

  // (A_a + eps B_a)(A_b + eps B_b) = A_a A_b + eps (A_a B_b + B_a A_b)
  friend DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b) {
    return {a.p * b.p, a.p * b.d + a.d * b.p};
  }

  DualQuaternion conj() const { return {p.conj(), d.conj()}; }

  // norm(h) = h.conj(h) = |A|^2 + eps * 2 sum_i a_i b_i
  DualNumber<T> norm() const {
    T du = T(2) * (p.w * d.w + p.x * d.x + p.y * d.y + p.z * d.z);
    return {p.squared(), du};
  }

  // Sum of the eight squared coordinates (not the dual-quaternion norm).
  T coords_squared() const { return p.squared() + d.squared(); }
};

using Quat = Quaternion<double>;
using DQ = DualQuaternion<double>;
using CQuat = Quaternion<std::complex<double>>;
using CDQ = DualQuaternion<std::complex<double>>;

template <typename T, typename U>
DualQuaternion<T> dq_cast(const DualQuaternion<U>& a) {
  return {{T(a.p.w), T(a.p.x), T(a.p.y), T(a.p.z)}, {T(a.d.w), T(a.d.x), T(a.d.y), T(a.d.z)}};
}

inline Quat quat_from_vec(const Vec3& v) { return Quat::vector(v.x(), v.y(), v.z()); }
inline Vec3 vec_from_quat(const Quat& q) { return {q.x, q.y, q.z}; }

inline double coords_norm(const DQ& a) { return std::sqrt(a.coords_squared()); }

inline double dot8(const DQ& a, const DQ& b) {
  double s = 0;
  for (int i = 0; i < 8; ++i) s += a.coeff(i) * b.coeff(i);
  return s;
}

constexpr double kDefaultTol = 1e-9;

// Inverse of a dual quaternion with invertible primal part:
// a^-1 = conj(a) * norm(a)^-1 with the dual-number reciprocal
// (r + eps d)^-1 = 1/r - eps d/r^2.
inline DQ dq_inverse(const DQ& a) {
  auto n = a.norm();
  if (n.re == 0.0) throw std::invalid_argument("dq_inverse: primal part has zero norm");
  DQ c = a.conj();
  double ir = 1.0 / n.re, id = -n.du / (n.re * n.re);
  return {ir * c.p, ir * c.d + id * c.p};
}

// Study condition sum a_i b_i = 0, tested relative to the squared 8-norm.
inline bool on_study_quadric(const DQ& a, double tol = kDefaultTol) {
  double n2 = a.coords_squared();
  if (n2 == 0.0) throw std::invalid_argument("on_study_quadric: zero dual quaternion");
  return std::abs(0.5 * a.norm().du) <= tol * n2;
}

// Projective equality of the two 8-vectors: the component of a orthogonal to
// b, after unit normalization of both, must be small.
inline bool proj_equiv(const DQ& a, const DQ& b, double tol = kDefaultTol) {
  double na = coords_norm(a), nb = coords_norm(b);
  if (na == 0.0 || nb == 0.0) throw std::invalid_argument("proj_equiv: zero dual quaternion");
  double c = dot8(a, b) / (na * nb);
  double rej2 = 0;
  for (int i = 0; i < 8; ++i) {
    double r = a.coeff(i) / na - c * b.coeff(i) / nb;
    rej2 += r * r;
  }
  return std::sqrt(rej2) <= tol;
}

// A line p + eps q: unit direction p, moment q = anchor x p.
struct Line {
  Vec3 dir;
  Vec3 moment;

  Line() : dir(Vec3::UnitZ()), moment(Vec3::Zero()) {}
  Line(const Vec3& p, const Vec3& q) : dir(p), moment(q) {}

  static Line through(const Vec3& point, const Vec3& direction) {
    Vec3 p = direction.normalized();
    return {p, point.cross(p)};
  }

  // Point of the line closest to the origin, p x q for unit p.
  Vec3 anchor() const { return dir.cross(moment); }

  DQ to_dq() const {
    return {Quat::vector(dir.x(), dir.y(), dir.z()), Quat::vector(moment.x(), moment.y(), moment.z())};
  }

  // |p| = 1 and <p, q> = 0 within tol, i.e. h^2 = -1.
  bool is_valid(double tol = kDefaultTol) const {
    return std::abs(dir.squaredNorm() - 1.0) <= 2 * tol && std::abs(dir.dot(moment)) <= tol * (1 + moment.norm());
  }

  // Project onto the exact line conditions; returns how far the input was off.
  double renormalize() {
    double before = (dir.norm() - 1.0) * (dir.norm() - 1.0);
    double n = dir.norm();
    if (n == 0.0) throw std::invalid_argument("Line: zero direction");
    dir /= n;
    moment /= n;
    double axial = dir.dot(moment);
    moment -= axial * dir;
    return std::sqrt(before) + std::abs(axial);
  }
};

// Reads p from the primal vector part and q from the dual vector part.
inline Line line_from_dq(const DQ& h, double tol = kDefaultTol) {
  Vec3 p(h.p.x, h.p.y, h.p.z), q(h.d.x, h.d.y, h.d.z);
  if (std::abs(h.p.w) > tol * (1 + std::abs(h.p.w)) || p.norm() == 0.0)
    throw std::invalid_argument("line_from_dq: primal part is not a pure unit vector");
  Line ln(p, q);
  ln.renormalize();
  return ln;
}

// Euclidean action of a Study-quadric element with invertible primal part.
// With the motion conventions used here (m = 1 - eps s p for a prismatic
// joint), the translation scale works out to -2 s along p.
inline Vec3 act_on_point(const DQ& g, const Vec3& x, double tol = kDefaultTol) {
  double pn2 = g.p.squared();
  if (pn2 <= tol * tol * g.coords_squared())
    throw std::invalid_argument("act_on_point: zero primal part (element of E)");
  if (!on_study_quadric(g, 1e-6)) throw std::invalid_argument("act_on_point: not a displacement");
  Quat X = quat_from_vec(x);
  Quat r = g.p * X * g.p.conj() + g.d * g.p.conj() - g.p * g.d.conj();
  return vec_from_quat(r) / pn2;
}

// Lines transform by the same sandwich, h -> g h conj(g), rescaled.
inline Line transform_line(const DQ& g, const Line& h, double tol = kDefaultTol) {
  double pn2 = g.p.squared();
  if (pn2 <= tol * tol * g.coords_squared())
    throw std::invalid_argument("transform_line: zero primal part");
  DQ moved = g * h.to_dq() * g.conj();
  Line out(vec_from_quat(moved.p) / pn2, vec_from_quat(moved.d) / pn2);
  out.renormalize();
  return out;
}

}  // namespace linkforge
