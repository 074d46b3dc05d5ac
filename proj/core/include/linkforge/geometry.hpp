#pragma once

// Line geometry on Pluecker data: parallelism, common normals, the signed
// offset of three lines and angle/distance invariants of axis pairs.

#include "linkforge/dq.hpp"

namespace linkforge {

bool is_parallel(const Line& h1, const Line& h2, double tol = kDefaultTol);

struct CommonNormal {
  Line line;   // oriented along dir1 x dir2
  Vec3 foot1;  // on h1
  Vec3 foot2;  // on h2
};

// Unique line meeting both inputs at right angles. Undefined for parallel
// lines; also valid for intersecting lines, where both feet coincide.
CommonNormal common_normal(const Line& h1, const Line& h2, double tol = kDefaultTol);

// Signed distance along h2 between the feet of the common normals n12 and
// n23, oriented by h2's direction vector. Undefined when h1 || h2 or
// h2 || h3.
double offset(const Line& h1, const Line& h2, const Line& h3, double tol = kDefaultTol);

struct AngleDistance {
  double angle;     // in [0, pi]
  double distance;  // >= 0
};

AngleDistance axis_angle_and_distance(const Line& h1, const Line& h2, double tol = kDefaultTol);

// Least-squares point minimizing squared distance to all lines, with the
// rms residual. Used for concurrency tests.
struct ConcurrencyFit {
  Vec3 point;
  double rms;
};
ConcurrencyFit fit_common_point(const std::vector<Line>& lines);

}  // namespace linkforge
