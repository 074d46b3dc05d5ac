#include "linkforge/geometry.hpp"

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace linkforge {

bool is_parallel(const Line& h1, const Line& h2, double tol) {
  return h1.dir.cross(h2.dir).norm() <= tol;
}

CommonNormal common_normal(const Line& h1, const Line& h2, double tol) {
  if (is_parallel(h1, h2, tol))
    throw std::invalid_argument("common_normal: lines are parallel or identical");
  Vec3 c1 = h1.anchor(), c2 = h2.anchor();
  double d = h1.dir.dot(h2.dir);
  Vec3 w = c1 - c2;
  // closest points: t1 - d t2 = -w.p1, d t1 - t2 = -w.p2
  double r1 = -w.dot(h1.dir), r2 = -w.dot(h2.dir);
  double den = 1.0 - d * d;
  double t1 = (r1 - d * r2) / den;
  double t2 = (d * r1 - r2) / den;
  CommonNormal cn;
  cn.foot1 = c1 + t1 * h1.dir;
  cn.foot2 = c2 + t2 * h2.dir;
  Vec3 n = h1.dir.cross(h2.dir).normalized();
  cn.line = Line(n, cn.foot1.cross(n));
  return cn;
}

double offset(const Line& h1, const Line& h2, const Line& h3, double tol) {
  if (is_parallel(h1, h2, tol) || is_parallel(h2, h3, tol))
    throw std::invalid_argument("offset: undefined, middle line parallel to a neighbour");
  Vec3 fa = common_normal(h1, h2, tol).foot2;
  Vec3 fb = common_normal(h2, h3, tol).foot1;
  return (fb - fa).dot(h2.dir);
}

AngleDistance axis_angle_and_distance(const Line& h1, const Line& h2, double tol) {
  Vec3 cr = h1.dir.cross(h2.dir);
  double angle = std::atan2(cr.norm(), h1.dir.dot(h2.dir));
  Vec3 w = h2.anchor() - h1.anchor();
  double distance;
  if (cr.norm() <= tol) {
    distance = (w - w.dot(h1.dir) * h1.dir).norm();
  } else {
    distance = std::abs(w.dot(cr.normalized()));
  }
  return {angle, distance};
}

ConcurrencyFit fit_common_point(const std::vector<Line>& lines) {
  Eigen::Matrix3d A = Eigen::Matrix3d::Zero();
  Vec3 b = Vec3::Zero();
  for (const auto& ln : lines) {
    Eigen::Matrix3d P = Eigen::Matrix3d::Identity() - ln.dir * ln.dir.transpose();
    A += P;
    b += P * ln.anchor();
  }
  Vec3 x = A.ldlt().solve(b);
  double sq = 0;
  for (const auto& ln : lines) {
    Vec3 r = x - ln.anchor();
    sq += (r - r.dot(ln.dir) * ln.dir).squaredNorm();
  }
  return {x, std::sqrt(sq / static_cast<double>(lines.size()))};
}

}  // namespace linkforge
