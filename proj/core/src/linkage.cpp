#include "linkforge/linkage.hpp"

#include <algorithm>

namespace linkforge {

Joint Joint::revolute(const Line& axis) {
  Joint j;
  j.kind = JointKind::Revolute;
  j.axis = axis;
  j.axis.renormalize();
  return j;
}

Joint Joint::prismatic(const Vec3& direction) {
  if (direction.norm() == 0.0) throw std::invalid_argument("prismatic joint: zero direction");
  Joint j;
  j.kind = JointKind::Prismatic;
  j.direction = direction.normalized();
  return j;
}

Joint Joint::cylindrical(const Line& axis) {
  Joint j;
  j.kind = JointKind::Cylindrical;
  j.axis = axis;
  j.axis.renormalize();
  return j;
}

Joint Joint::helical(const Line& axis, double pitch) {
  if (pitch == 0.0) throw std::invalid_argument("helical joint: pitch must be nonzero");
  Joint j;
  j.kind = JointKind::Helical;
  j.axis = axis;
  j.axis.renormalize();
  j.pitch = pitch;
  return j;
}

int Linkage::dof() const {
  int n = 0;
  for (const auto& j : joints) n += j.dof();
  return n;
}

std::vector<int> Linkage::dof_offsets() const {
  std::vector<int> offs;
  offs.reserve(joints.size() + 1);
  int n = 0;
  for (const auto& j : joints) {
    offs.push_back(n);
    n += j.dof();
  }
  offs.push_back(n);
  return offs;
}

std::string Linkage::census() const {
  std::string s;
  for (const auto& j : joints) s += joint_kind_char(j.kind);
  return s;
}

int Linkage::count(JointKind k) const {
  return static_cast<int>(std::count_if(joints.begin(), joints.end(),
                                        [&](const Joint& j) { return j.kind == k; }));
}

Linkage Linkage::cycled(int shift) const {
  Linkage out;
  int n = size();
  out.joints.reserve(n);
  for (int k = 0; k < n; ++k) out.joints.push_back(joints[(k + shift) % n]);
  return out;
}

Configuration initial_configuration(const Linkage& L) {
  Configuration c;
  c.joints.resize(L.joints.size());  // (1:0), s = 0, alpha = 0
  return c;
}

DQ joint_motion(const Joint& j, const JointConfig& c) {
  if ((j.kind == JointKind::Revolute || j.kind == JointKind::Cylindrical) && c.t0 == 0.0 && c.t1 == 0.0)
    throw std::invalid_argument("joint_motion: homogeneous pair (0:0)");
  double zeros[2] = {0.0, 0.0};  // C-joints consume two chart entries
  return joint_motion_shifted<double>(j, c, zeros);
}

DQ closure_product(const Linkage& L, const Configuration& c) {
  if (c.size() != L.size()) throw std::invalid_argument("configuration size mismatch");
  DQ M = DQ::one();
  for (int k = 0; k < L.size(); ++k) M = M * joint_motion(L.joints[k], c.joints[k]);
  return M;
}

Eigen::Matrix<double, 7, 1> closure_residual(const Linkage& L, const Configuration& c) {
  if (c.size() != L.size()) throw std::invalid_argument("configuration size mismatch");
  auto offs = L.dof_offsets();
  std::vector<double> zeros(offs.back(), 0.0);
  auto r = closure_residual_shifted<double>(L, c, zeros.data(), offs);
  Eigen::Matrix<double, 7, 1> out;
  for (int i = 0; i < 7; ++i) out[i] = r[i];
  return out;
}

Configuration apply_chart(const Linkage& L, const Configuration& c, const Eigen::VectorXd& delta) {
  if (delta.size() != L.dof()) throw std::invalid_argument("apply_chart: delta size mismatch");
  Configuration out = c;
  auto offs = L.dof_offsets();
  for (int k = 0; k < L.size(); ++k) {
    JointConfig& jc = out.joints[k];
    switch (L.joints[k].kind) {
      case JointKind::Revolute: {
        double co = std::cos(delta[offs[k]]), si = std::sin(delta[offs[k]]);
        double T0 = jc.t0 * co - jc.t1 * si;
        double T1 = jc.t0 * si + jc.t1 * co;
        double n = std::hypot(T0, T1);
        jc.t0 = T0 / n;
        jc.t1 = T1 / n;
        break;
      }
      case JointKind::Prismatic:
        jc.s += delta[offs[k]];
        break;
      case JointKind::Cylindrical: {
        jc.s += delta[offs[k]];
        double co = std::cos(delta[offs[k] + 1]), si = std::sin(delta[offs[k] + 1]);
        double T0 = jc.t0 * co - jc.t1 * si;
        double T1 = jc.t0 * si + jc.t1 * co;
        double n = std::hypot(T0, T1);
        jc.t0 = T0 / n;
        jc.t1 = T1 / n;
        break;
      }
      case JointKind::Helical:
        jc.alpha += delta[offs[k]];
        break;
    }
  }
  return out;
}

std::vector<double> joint_angles(const Linkage& L, const Configuration& c) {
  std::vector<double> a(L.size(), 0.0);
  for (int k = 0; k < L.size(); ++k) {
    switch (L.joints[k].kind) {
      case JointKind::Revolute:
      case JointKind::Cylindrical:
        a[k] = pair_angle(c.joints[k].t0, c.joints[k].t1);
        break;
      case JointKind::Helical:
        a[k] = c.joints[k].alpha;
        break;
      case JointKind::Prismatic:
        break;
    }
  }
  return a;
}

std::vector<double> joint_translations(const Linkage& L, const Configuration& c) {
  std::vector<double> s(L.size(), 0.0);
  for (int k = 0; k < L.size(); ++k) {
    switch (L.joints[k].kind) {
      case JointKind::Prismatic:
      case JointKind::Cylindrical:
        s[k] = c.joints[k].s;
        break;
      case JointKind::Helical:
        s[k] = L.joints[k].pitch * c.joints[k].alpha;
        break;
      case JointKind::Revolute:
        break;
    }
  }
  return s;
}

Linkage spherical_projection(const Linkage& L) {
  Linkage out;
  for (const auto& j : L.joints) {
    if (j.kind == JointKind::Prismatic) continue;
    out.joints.push_back(Joint::revolute(Line(j.axis.dir, Vec3::Zero())));
  }
  return out;
}

}  // namespace linkforge
