#pragma once

// Joint and closed-linkage model: per-joint motion maps, the projective
// closure residual, initial configuration and spherical projection.
//
// Joint parameters:
//   R  rotation parameter on P^1 as a homogeneous pair (t0 : t1), t = t0/t1,
//      with the initial position t = infinity stored as (1 : 0)
//   P  translation parameter s
//   C  (s, t) independent
//   H  angle alpha, translation coupled as s = g * alpha
//
// Local charts used for differentiation and tracking shift s and alpha
// additively and rotate the homogeneous pair; a pair rotation by delta
// advances the joint angle 2 arccot(t) by exactly 2*delta.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "linkforge/dq.hpp"
#include "linkforge/jet.hpp"

namespace linkforge {

enum class JointKind { Revolute, Prismatic, Cylindrical, Helical };

inline char joint_kind_char(JointKind k) {
  switch (k) {
    case JointKind::Revolute: return 'R';
    case JointKind::Prismatic: return 'P';
    case JointKind::Cylindrical: return 'C';
    default: return 'H';
  }
}

struct Joint {
  JointKind kind = JointKind::Revolute;
  Line axis;       // R, C, H
  Vec3 direction;  // P, unit
  double pitch = 0;  // H, nonzero

  static Joint revolute(const Line& axis);
  static Joint prismatic(const Vec3& direction);
  static Joint cylindrical(const Line& axis);
  static Joint helical(const Line& axis, double pitch);

  int dof() const { return kind == JointKind::Cylindrical ? 2 : 1; }
};

struct Linkage {
  std::vector<Joint> joints;

  Linkage() = default;
  explicit Linkage(std::vector<Joint> js) : joints(std::move(js)) {}

  int size() const { return static_cast<int>(joints.size()); }
  int dof() const;
  // first chart index of each joint, plus the total as a sentinel
  std::vector<int> dof_offsets() const;
  std::string census() const;  // e.g. "PRRRR"
  int count(JointKind k) const;
  Linkage cycled(int shift) const;  // joints rotated so joint `shift` comes first
};

struct JointConfig {
  double t0 = 1, t1 = 0;  // R and the rotation of C
  double s = 0;           // P and C
  double alpha = 0;       // H
};

struct Configuration {
  std::vector<JointConfig> joints;
  int size() const { return static_cast<int>(joints.size()); }
};

Configuration initial_configuration(const Linkage& L);

// Thrown when the closure product degenerates to (numerically) zero, which
// on real input data signals a bond-like degeneration rather than a residual.
struct ClosureDegenerate : std::runtime_error {
  ClosureDegenerate() : std::runtime_error("closure product degenerated to zero") {}
};

// Per-joint motion map. For H the homogeneous form
// (1 - eps g a p)(cos(a/2) - sin(a/2) h) is used, so alpha = pi needs no
// special casing.
DQ joint_motion(const Joint& j, const JointConfig& c);

DQ closure_product(const Linkage& L, const Configuration& c);

// Unit-normalize the closure product, orient its identity coordinate to be
// nonnegative and return the seven remaining coordinates.
Eigen::Matrix<double, 7, 1> closure_residual(const Linkage& L, const Configuration& c);

// Applies chart offsets (one entry per chart dof, see Linkage::dof_offsets)
// and renormalizes the homogeneous pairs.
Configuration apply_chart(const Linkage& L, const Configuration& c, const Eigen::VectorXd& delta);

// Rotation angle represented by a homogeneous pair, in (-2pi, 2pi].
inline double pair_angle(double t0, double t1) { return 2.0 * std::atan2(t1, t0); }

// Rotation angle of each joint at c: R/C from the pair, H directly, P zero.
std::vector<double> joint_angles(const Linkage& L, const Configuration& c);
// Translation of each joint at c: P/C from s, H from g*alpha, R zero.
std::vector<double> joint_translations(const Linkage& L, const Configuration& c);

// Axes become directions through the origin, P-joints disappear, C/H become
// R. The result can have fewer than three joints; is_proper_linkage tells.
Linkage spherical_projection(const Linkage& L);
inline bool is_proper_linkage(const Linkage& L) { return L.size() >= 3; }

// ---- templated evaluation (double / Jet) ------------------------------

template <typename S>
DualQuaternion<S> joint_motion_shifted(const Joint& j, const JointConfig& c, const S* delta) {
  using DQS = DualQuaternion<S>;
  using std::cos;
  using std::sin;
  switch (j.kind) {
    case JointKind::Revolute: {
      S co = cos(delta[0]), si = sin(delta[0]);
      S T0 = S(c.t0) * co - S(c.t1) * si;
      S T1 = S(c.t0) * si + S(c.t1) * co;
      DQS h = dq_cast<S>(j.axis.to_dq());
      return T0 * DQS::one() - T1 * h;
    }
    case JointKind::Prismatic: {
      S s = S(c.s) + delta[0];
      DQS m = DQS::one();
      m.d = -s * Quaternion<S>(S(0), S(j.direction.x()), S(j.direction.y()), S(j.direction.z()));
      return m;
    }
    case JointKind::Cylindrical: {
      S s = S(c.s) + delta[0];
      S co = cos(delta[1]), si = sin(delta[1]);
      S T0 = S(c.t0) * co - S(c.t1) * si;
      S T1 = S(c.t0) * si + S(c.t1) * co;
      DQS h = dq_cast<S>(j.axis.to_dq());
      DQS tr = DQS::one();
      tr.d = -s * Quaternion<S>(S(0), S(j.axis.dir.x()), S(j.axis.dir.y()), S(j.axis.dir.z()));
      return tr * (T0 * DQS::one() - T1 * h);
    }
    default: {  // Helical
      S a = S(c.alpha) + delta[0];
      S half = S(0.5) * a;
      DQS h = dq_cast<S>(j.axis.to_dq());
      DQS tr = DQS::one();
      tr.d = -(S(j.pitch) * a) *
             Quaternion<S>(S(0), S(j.axis.dir.x()), S(j.axis.dir.y()), S(j.axis.dir.z()));
      return tr * (cos(half) * DQS::one() - sin(half) * h);
    }
  }
}

// Residual of the shifted configuration; components come out as S so jets
// carry derivatives through normalization and sign orientation.
template <typename S>
std::array<S, 7> closure_residual_shifted(const Linkage& L, const Configuration& c,
                                          const S* delta_all, const std::vector<int>& offs) {
  using std::sqrt;
  DualQuaternion<S> M = DualQuaternion<S>::one();
  for (int k = 0; k < L.size(); ++k)
    M = M * joint_motion_shifted<S>(L.joints[k], c.joints[k], delta_all + offs[k]);
  S n2 = M.coords_squared();
  if (value_of(n2) < 1e-24) throw ClosureDegenerate();
  S inv = S(1) / sqrt(n2);
  if (value_of(M.p.w) < 0) inv = S(-1) * inv;
  std::array<S, 7> r;
  for (int i = 1; i < 8; ++i) r[i - 1] = M.coeff(i) * inv;
  return r;
}

}  // namespace linkforge
