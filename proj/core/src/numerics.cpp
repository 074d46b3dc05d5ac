#include "linkforge/numerics.hpp"

#include <random>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace linkforge {

namespace {

Eigen::MatrixXd residual_jacobian(const Linkage& L, const Configuration& c) {
  auto offs = L.dof_offsets();
  int dof = offs.back();
  Eigen::MatrixXd J(7, dof);
  std::vector<Jet> delta(dof, Jet(0.0));
  for (int i = 0; i < dof; ++i) {
    delta[i].d = 1.0;
    auto r = closure_residual_shifted<Jet>(L, c, delta.data(), offs);
    for (int row = 0; row < 7; ++row) J(row, i) = r[row].d;
    delta[i].d = 0.0;
  }
  return J;
}

// Chart-derivative factor from delta to the joint angle: rotations of the
// homogeneous pair advance the angle by 2*delta, H charts by delta.
struct ConstraintRows {
  std::vector<std::vector<double>> angle_rows;
  std::vector<std::vector<double>> translation_rows;
  std::vector<double> angle_targets;
  std::vector<double> translation_targets;

  int count() const {
    return static_cast<int>(angle_rows.size() + translation_rows.size());
  }
};

void check_row_sizes(const Linkage& L, const std::vector<std::vector<double>>& rows,
                     const char* what) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != L.size())
      throw std::invalid_argument(std::string(what) + ": row length must equal joint count");
}

double angle_row_value(const std::vector<double>& row, const std::vector<double>& angles) {
  double v = 0;
  for (size_t k = 0; k < row.size(); ++k) v += row[k] * angles[k];
  return v;
}

double translation_row_value(const std::vector<double>& row, const std::vector<double>& trans) {
  double v = 0;
  for (size_t k = 0; k < row.size(); ++k) v += row[k] * trans[k];
  return v;
}

// Augmented residual and Jacobian including the constraint rows.
void augmented_system(const Linkage& L, const Configuration& c,
                      const std::vector<double>& angles, const ConstraintRows& rows,
                      Eigen::VectorXd& r, Eigen::MatrixXd& J) {
  auto offs = L.dof_offsets();
  int dof = offs.back();
  int m = 7 + rows.count();
  r.resize(m);
  J.resize(m, dof);
  Eigen::Matrix<double, 7, 1> r7 = closure_residual(L, c);
  r.head(7) = r7;
  J.topRows(7) = residual_jacobian(L, c);
  auto trans = joint_translations(L, c);
  int row_i = 7;
  for (size_t ri = 0; ri < rows.angle_rows.size(); ++ri, ++row_i) {
    const auto& row = rows.angle_rows[ri];
    r[row_i] = angle_row_value(row, angles) - rows.angle_targets[ri];
    J.row(row_i).setZero();
    for (int k = 0; k < L.size(); ++k) {
      if (row[k] == 0.0) continue;
      switch (L.joints[k].kind) {
        case JointKind::Revolute: J(row_i, offs[k]) = 2.0 * row[k]; break;
        case JointKind::Cylindrical: J(row_i, offs[k] + 1) = 2.0 * row[k]; break;
        case JointKind::Helical: J(row_i, offs[k]) = row[k]; break;
        case JointKind::Prismatic: break;
      }
    }
  }
  for (size_t ri = 0; ri < rows.translation_rows.size(); ++ri, ++row_i) {
    const auto& row = rows.translation_rows[ri];
    r[row_i] = translation_row_value(row, trans) - rows.translation_targets[ri];
    J.row(row_i).setZero();
    for (int k = 0; k < L.size(); ++k) {
      if (row[k] == 0.0) continue;
      switch (L.joints[k].kind) {
        case JointKind::Prismatic:
        case JointKind::Cylindrical: J(row_i, offs[k]) = row[k]; break;
        case JointKind::Helical: J(row_i, offs[k]) = row[k] * L.joints[k].pitch; break;
        case JointKind::Revolute: break;
      }
    }
  }
}

// Unwrapped-angle bookkeeping for a chart step.
void advance_angles(const Linkage& L, const Eigen::VectorXd& delta, std::vector<double>& angles) {
  auto offs = L.dof_offsets();
  for (int k = 0; k < L.size(); ++k) {
    switch (L.joints[k].kind) {
      case JointKind::Revolute: angles[k] += 2.0 * delta[offs[k]]; break;
      case JointKind::Cylindrical: angles[k] += 2.0 * delta[offs[k] + 1]; break;
      case JointKind::Helical: angles[k] += delta[offs[k]]; break;
      case JointKind::Prismatic: break;
    }
  }
}

Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& J, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() ? sv[0] : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > tol * smax) ++rank;
  return svd.matrixV().rightCols(J.cols() - rank);
}

bool is_initial_configuration(const Configuration& c) {
  for (const auto& jc : c.joints) {
    if (jc.s != 0.0 || jc.alpha != 0.0) return false;
    if (std::abs(jc.t1) > 1e-15 || jc.t0 == 0.0) return false;
  }
  return true;
}

struct CorrectorResult {
  bool converged = false;
  Configuration config;
  double residual = 0;
};

CorrectorResult correct(const Linkage& L, Configuration c, std::vector<double>& angles,
                        const ConstraintRows& rows, const TrackOptions& opts) {
  Eigen::VectorXd r;
  Eigen::MatrixXd J;
  for (int it = 0; it < opts.max_newton; ++it) {
    augmented_system(L, c, angles, rows, r, J);
    if (r.norm() <= opts.corrector_tol) return {true, c, r.norm()};
    Eigen::BDCSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(opts.rank_tol);
    Eigen::VectorXd step = -svd.solve(r);
    c = apply_chart(L, c, step);
    advance_angles(L, step, angles);
  }
  augmented_system(L, c, angles, rows, r, J);
  return {r.norm() <= opts.corrector_tol, c, r.norm()};
}

}  // namespace

Eigen::MatrixXd closure_jacobian(const Linkage& L, const Configuration& c, double on_curve_tol) {
  double rn = closure_residual(L, c).norm();
  if (rn > on_curve_tol)
    throw std::invalid_argument("closure_jacobian: configuration is not on the closure set (residual " +
                                std::to_string(rn) + ")");
  return residual_jacobian(L, c);
}

RankInfo numeric_rank(const Eigen::MatrixXd& J, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
  RankInfo info;
  info.singular_values = svd.singularValues();
  double smax = info.singular_values.size() ? info.singular_values[0] : 0.0;
  auto rank_at = [&](double t) {
    int r = 0;
    for (int i = 0; i < info.singular_values.size(); ++i)
      if (info.singular_values[i] > t * smax) ++r;
    return r;
  };
  info.rank = rank_at(tol);
  info.stable = rank_at(tol) == rank_at(10.0 * tol);
  return info;
}

TangentReport mobility_estimate(const Linkage& L, const Configuration& c, double rank_tol,
                                uint64_t seed) {
  TangentReport rep;
  rep.dof = L.dof();
  rep.rank_tol = rank_tol;
  rep.seed = seed;
  Eigen::MatrixXd J = closure_jacobian(L, c);
  RankInfo at_input = numeric_rank(J, rank_tol);
  rep.at = c;
  rep.rank = at_input.rank;
  rep.singular_values = at_input.singular_values;
  rep.rank_stable = at_input.stable;

  if (is_initial_configuration(c) && at_input.rank < rep.dof) {
    // The initial configuration can be a singular point; re-evaluate at a
    // nearby tracked point and report both ranks.
    TrackOptions opts;
    opts.steps = 4;
    opts.steplen = 0.05;
    opts.seed = seed;
    opts.rank_tol = rank_tol;
    try {
      CurveSample s = track_curve(L, c, Eigen::VectorXd(), opts);
      const Configuration& g = s.configurations.back();
      RankInfo refined = numeric_rank(residual_jacobian(L, g), rank_tol);
      rep.refined = true;
      rep.rank_at_input = at_input.rank;
      rep.rank = refined.rank;
      rep.singular_values = refined.singular_values;
      rep.rank_stable = refined.stable;
      rep.at = g;
      if (refined.rank != at_input.rank)
        rep.warnings.push_back("rank at initial configuration (" + std::to_string(at_input.rank) +
                               ") differs from generic rank (" + std::to_string(refined.rank) + ")");
    } catch (const TrackingError&) {
      rep.warnings.push_back("could not track away from the initial configuration");
    }
  }
  rep.mobility = rep.dof - rep.rank;
  if (!rep.rank_stable)
    rep.warnings.push_back("rank is not stable across a tolerance decade");
  return rep;
}

CurveSample track_curve(const Linkage& L, const Configuration& start,
                        const Eigen::VectorXd& tangent_seed, const TrackOptions& opts) {
  if (start.size() != L.size()) throw std::invalid_argument("track_curve: configuration size mismatch");
  check_row_sizes(L, opts.angle_constraints, "angle constraint");
  check_row_sizes(L, opts.translation_constraints, "translation constraint");
  double rn = closure_residual(L, start).norm();
  if (rn > opts.on_curve_tol)
    throw TrackingError("start configuration is not on the closure set (residual " +
                        std::to_string(rn) + ")");

  CurveSample out;
  out.seed = opts.seed;
  std::vector<double> angles = joint_angles(L, start);
  auto trans0 = joint_translations(L, start);

  ConstraintRows rows;
  rows.angle_rows = opts.angle_constraints;
  rows.translation_rows = opts.translation_constraints;
  for (const auto& row : rows.angle_rows) rows.angle_targets.push_back(angle_row_value(row, angles));
  for (const auto& row : rows.translation_rows)
    rows.translation_targets.push_back(translation_row_value(row, trans0));

  Configuration c = start;
  if (rn > opts.corrector_tol) {
    CorrectorResult corr = correct(L, c, angles, rows, opts);
    if (!corr.converged)
      throw TrackingError("could not correct the start configuration onto the closure set");
    c = corr.config;
    rn = corr.residual;
  }
  Eigen::VectorXd r;
  Eigen::MatrixXd J;
  augmented_system(L, c, angles, rows, r, J);
  RankInfo rank0 = numeric_rank(J, opts.rank_tol);
  out.start_rank = rank0.rank;
  int dof = L.dof();
  if (rank0.rank >= dof)
    throw TrackingError("no tangent direction: closure Jacobian has full column rank");

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  Eigen::MatrixXd K = kernel_basis(J, opts.rank_tol);
  Eigen::VectorXd tangent;
  if (tangent_seed.size() == dof && tangent_seed.norm() > 0) {
    tangent = K * (K.transpose() * tangent_seed);
    if (tangent.norm() < 1e-12)
      throw TrackingError("tangent seed is orthogonal to the Jacobian kernel");
  } else {
    Eigen::VectorXd mix(K.cols());
    for (int i = 0; i < mix.size(); ++i) mix[i] = gauss(rng);
    tangent = K * mix;
  }
  tangent.normalize();

  auto push_sample = [&](const Configuration& cc, double res) {
    out.configurations.push_back(cc);
    out.residual_norms.push_back(res);
    out.angles.push_back(angles);
    out.translations.push_back(joint_translations(L, cc));
  };
  push_sample(c, rn);

  for (int step = 0; step < opts.steps; ++step) {
    double h = opts.steplen;
    bool accepted = false;
    for (int halving = 0; halving <= opts.max_halvings; ++halving) {
      Configuration pred = apply_chart(L, c, h * tangent);
      std::vector<double> pred_angles = angles;
      advance_angles(L, h * tangent, pred_angles);
      CorrectorResult corr = correct(L, pred, pred_angles, rows, opts);
      if (corr.converged) {
        c = corr.config;
        angles = pred_angles;
        push_sample(c, corr.residual);
        accepted = true;
        break;
      }
      h *= 0.5;
    }
    if (!accepted)
      throw TrackingError("corrector failed to converge after " +
                          std::to_string(opts.max_halvings) + " step halvings");

    augmented_system(L, c, angles, rows, r, J);
    RankInfo ri = numeric_rank(J, opts.rank_tol);
    if (ri.rank != rank0.rank) out.rank_changed = true;
    K = kernel_basis(J, opts.rank_tol);
    Eigen::VectorXd next = K * (K.transpose() * tangent);
    if (next.norm() < 1e-8) {
      next = K.col(0);
      if (next.dot(tangent) < 0) next = -next;
    }
    tangent = next.normalized();
  }
  return out;
}

Configuration generic_point(const Linkage& L, uint64_t seed, int steps, double steplen) {
  TrackOptions opts;
  opts.steps = steps;
  opts.steplen = steplen;
  opts.seed = seed;
  CurveSample s = track_curve(L, initial_configuration(L), Eigen::VectorXd(), opts);
  return s.configurations.back();
}

std::vector<Point3> trace_point(const Linkage& L, const CurveSample& sample, int link_index,
                                const Point3& x) {
  if (link_index < 0 || link_index > L.size())
    throw std::invalid_argument("trace_point: link index out of range");
  std::vector<Point3> out;
  out.reserve(sample.configurations.size());
  for (const auto& c : sample.configurations) {
    DQ M = DQ::one();
    for (int k = 0; k < link_index; ++k) M = M * joint_motion(L.joints[k], c.joints[k]);
    double pn = std::sqrt(M.p.squared());
    if (pn < 1e-12) throw std::runtime_error("trace_point: partial product has zero primal part");
    out.push_back(act_on_point(M, x));
  }
  return out;
}

int constrained_tangent_dim(const Linkage& L, const Configuration& c,
                            const std::vector<std::vector<double>>& angle_rows,
                            const std::vector<std::vector<double>>& translation_rows,
                            double rank_tol) {
  check_row_sizes(L, angle_rows, "angle constraint");
  check_row_sizes(L, translation_rows, "translation constraint");
  ConstraintRows rows;
  rows.angle_rows = angle_rows;
  rows.translation_rows = translation_rows;
  auto angles = joint_angles(L, c);
  auto trans = joint_translations(L, c);
  for (const auto& row : rows.angle_rows) rows.angle_targets.push_back(angle_row_value(row, angles));
  for (const auto& row : rows.translation_rows)
    rows.translation_targets.push_back(translation_row_value(row, trans));
  Eigen::VectorXd r;
  Eigen::MatrixXd J;
  augmented_system(L, c, angles, rows, r, J);
  return L.dof() - numeric_rank(J, rank_tol).rank;
}

}  // namespace linkforge
