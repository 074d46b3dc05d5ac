#pragma once

// Closure Jacobian, numerical mobility estimation and predictor-corrector
// tracking of configuration curves.
//
// All derivatives are taken in local charts: additive shifts for s and
// alpha, rotations of the homogeneous pair for rotation parameters. A pair
// rotation by delta advances the joint angle by exactly 2*delta, so linear
// constraints on (unwrapped) angles stay linear in chart coordinates.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "linkforge/linkage.hpp"

namespace linkforge {

struct TangentReport {
  int dof = 0;
  int rank = 0;
  int mobility = 0;
  Eigen::VectorXd singular_values;
  double rank_tol = 1e-8;
  bool rank_stable = true;  // rank unchanged when the tolerance moves a decade
  uint64_t seed = 0;
  bool refined = false;   // evaluated at a tracked point instead of the input
  int rank_at_input = -1; // rank at the supplied configuration when refined
  Configuration at;       // configuration the report was evaluated at
  std::vector<std::string> warnings;
};

struct TrackOptions {
  int steps = 50;
  double steplen = 0.05;
  double corrector_tol = 1e-12;
  int max_newton = 20;
  int max_halvings = 12;
  double on_curve_tol = 1e-8;
  double rank_tol = 1e-8;
  uint64_t seed = 0;
  // Rows over joints: sum_k row[k] * angle_k held constant along the path
  // (angles unwrapped continuously). Applies to R/C rotations and H.
  std::vector<std::vector<double>> angle_constraints;
  // Rows over joints: sum_k row[k] * translation_k held constant (P/C from
  // s, H from pitch*alpha).
  std::vector<std::vector<double>> translation_constraints;
};

struct CurveSample {
  std::vector<Configuration> configurations;
  std::vector<double> residual_norms;
  std::vector<std::vector<double>> angles;        // unwrapped, per sample x joint
  std::vector<std::vector<double>> translations;  // per sample x joint
  int start_rank = 0;
  bool rank_changed = false;
  uint64_t seed = 0;
};

struct TrackingError : std::runtime_error {
  explicit TrackingError(const std::string& what) : std::runtime_error(what) {}
};

// Derivative of the 7-component closure residual with respect to all chart
// dofs. Requires the configuration to lie on the closure set.
Eigen::MatrixXd closure_jacobian(const Linkage& L, const Configuration& c,
                                 double on_curve_tol = 1e-8);

// Rank from singular values, counting those above tol * sigma_max, with a
// one-decade stability check.
struct RankInfo {
  int rank = 0;
  Eigen::VectorXd singular_values;
  bool stable = true;
};
RankInfo numeric_rank(const Eigen::MatrixXd& J, double tol);

// Mobility = dof - rank at a generic point. When `c` is the initial
// configuration (which can be a singular point), a tiny seeded kernel step
// is tracked first and the rank is taken there; both ranks are reported.
TangentReport mobility_estimate(const Linkage& L, const Configuration& c, double rank_tol = 1e-8,
                                uint64_t seed = 0);

// Tangent predictor plus Newton corrector onto the residual zero set.
// The tangent seed may be empty, in which case a seeded random kernel
// direction is used at the start.
CurveSample track_curve(const Linkage& L, const Configuration& start,
                        const Eigen::VectorXd& tangent_seed, const TrackOptions& opts);

// Convenience: a few tracked steps away from the initial configuration.
Configuration generic_point(const Linkage& L, uint64_t seed, int steps = 4, double steplen = 0.05);

// Positions of x under the displacement of link `link_index` (the partial
// product m_1 ... m_k) at every sample.
std::vector<Point3> trace_point(const Linkage& L, const CurveSample& sample, int link_index,
                                const Point3& x);

// Dimension of the tangent space of the closure set intersected with the
// given constraint rows, at configuration c.
int constrained_tangent_dim(const Linkage& L, const Configuration& c,
                            const std::vector<std::vector<double>>& angle_rows,
                            const std::vector<std::vector<double>>& translation_rows,
                            double rank_tol = 1e-8);

}  // namespace linkforge
