#include "linkforge/classify.hpp"

#include <algorithm>
#include <cmath>

namespace linkforge {

namespace {

bool same_unoriented_direction(const Vec3& a, const Vec3& b, double tol) {
  return a.cross(b).norm() <= tol;
}

bool same_line(const Line& a, const Line& b, double tol) {
  if (!same_unoriented_direction(a.dir, b.dir, tol)) return false;
  return axis_angle_and_distance(a, b).distance <= tol;
}

bool kind_uses_axis(JointKind k) { return k != JointKind::Prismatic; }

TangentReport mobility_report(const Linkage& L, uint64_t seed) {
  return mobility_estimate(L, initial_configuration(L), 1e-8, seed);
}

bool all_axes_parallel(const std::vector<Line>& axes, double tol, Witness& w) {
  for (size_t i = 1; i < axes.size(); ++i) {
    if (!same_unoriented_direction(axes[0].dir, axes[i].dir, tol)) return false;
    w.parallel_pairs.push_back({0, static_cast<int>(i)});
  }
  return true;
}

std::vector<Line> axes_of(const Linkage& L) {
  std::vector<Line> axes;
  for (const auto& j : L.joints)
    if (kind_uses_axis(j.kind)) axes.push_back(j.axis);
  return axes;
}

double axis_scale(const std::vector<Line>& axes) {
  double s = 1.0;
  for (const auto& a : axes) s = std::max(s, a.anchor().norm());
  return s;
}

// Offsets of the five cyclic triples of a 5R loop, or nothing when some
// neighbouring pair is parallel.
std::optional<std::array<double, 5>> cyclic_offsets5(const std::vector<Line>& h, double tol) {
  std::array<double, 5> o{};
  for (int i = 0; i < 5; ++i) {
    const Line &a = h[i], &b = h[(i + 1) % 5], &c = h[(i + 2) % 5];
    if (is_parallel(a, b, tol) || is_parallel(b, c, tol)) return std::nullopt;
    o[i] = offset(a, b, c, tol);
  }
  return o;
}

}  // namespace

std::string to_string(LinkageClass c) {
  switch (c) {
    case LinkageClass::Degenerate: return "DEGENERATE";
    case LinkageClass::PlanarAllParallel: return "PLANAR_ALL_PARALLEL";
    case LinkageClass::SphericalConcurrent: return "SPHERICAL_CONCURRENT";
    case LinkageClass::Bennett: return "BENNETT";
    case LinkageClass::Goldberg: return "GOLDBERG";
    case LinkageClass::PrrrrTwoParallelPairs: return "PRRRR_TWO_PARALLEL_PAIRS";
    case LinkageClass::H5AllParallel: return "H5_ALL_PARALLEL";
    case LinkageClass::H5OnePTwoPairs: return "H5_ONE_P_TWO_PAIRS";
    case LinkageClass::NotClassifiedMobile: return "NOT_CLASSIFIED_MOBILE";
    case LinkageClass::PresumedRigid: return "PRESUMED_RIGID";
  }
  return "?";
}

std::optional<std::string> detect_degenerate(const Linkage& L, double tol) {
  int n = L.size();
  for (int i = 0; i < n; ++i) {
    const Joint& a = L.joints[i];
    const Joint& b = L.joints[(i + 1) % n];
    auto pair_name = [&](const char* hint) {
      return std::string(1, joint_kind_char(a.kind)) + joint_kind_char(b.kind) + " at joints " +
             std::to_string(i) + "," + std::to_string((i + 1) % n) + ": " + hint;
    };
    bool a_rot = a.kind == JointKind::Revolute || a.kind == JointKind::Helical;
    bool b_rot = b.kind == JointKind::Revolute || b.kind == JointKind::Helical;
    if (a_rot && b_rot && same_line(a.axis, b.axis, tol)) {
      if (a.kind == JointKind::Revolute && b.kind == JointKind::Revolute)
        return pair_name("simplify RR to R");
      if (a.kind == JointKind::Helical && b.kind == JointKind::Helical)
        return pair_name("simplify HH to H or C");
      return pair_name("simplify HR to C");
    }
    if (a.kind == JointKind::Prismatic && b.kind == JointKind::Prismatic &&
        same_unoriented_direction(a.direction, b.direction, tol))
      return pair_name("simplify PP to P");
    if (a.kind == JointKind::Helical && b.kind == JointKind::Prismatic &&
        same_unoriented_direction(a.axis.dir, b.direction, tol))
      return pair_name("simplify HP to C");
    if (a.kind == JointKind::Prismatic && b.kind == JointKind::Helical &&
        same_unoriented_direction(a.direction, b.axis.dir, tol))
      return pair_name("simplify HP to C");
  }
  return std::nullopt;
}

ClassLabel classify_5R(const Linkage& L, double tol, uint64_t seed) {
  if (L.size() != 5 || L.count(JointKind::Revolute) != 5)
    throw CensusError("classify_5R: expected five R-joints, got " + L.census());
  ClassLabel out;
  if (auto deg = detect_degenerate(L, tol)) {
    out.kind = LinkageClass::Degenerate;
    out.witness.degeneracy = *deg;
    return out;
  }
  auto axes = axes_of(L);
  out.mobility = mobility_report(L, seed);

  if (all_axes_parallel(axes, tol, out.witness)) {
    out.kind = LinkageClass::PlanarAllParallel;
    return out;
  }
  out.witness.parallel_pairs.clear();
  ConcurrencyFit fit = fit_common_point(axes);
  if (fit.rms <= tol * axis_scale(axes)) {
    out.kind = LinkageClass::SphericalConcurrent;
    out.witness.common_point = fit.point;
    out.witness.concurrency_rms = fit.rms;
    return out;
  }

  if (auto offs = cyclic_offsets5(axes, tol)) {
    // look for a cyclic shift with o(h4,h5,h1) = o(h5,h1,h2) = o(h1,h2,h3) = 0
    // and |o(h2,h3,h4)| = |o(h3,h4,h5)|
    for (int shift = 0; shift < 5; ++shift) {
      auto at = [&](int i) { return (*offs)[(i + shift) % 5]; };  // triple starting at h_{1+i}
      double z1 = at(3), z2 = at(4), z3 = at(0);
      double p1 = at(1), p2 = at(2);
      if (std::abs(z1) <= tol && std::abs(z2) <= tol && std::abs(z3) <= tol &&
          std::abs(std::abs(p1) - std::abs(p2)) <= tol) {
        out.kind = LinkageClass::Goldberg;
        out.witness.cyclic_shift = shift;
        for (int i = 0; i < 5; ++i) {
          out.witness.offset_triples.push_back((i + shift) % 5);
          out.witness.offsets.push_back(at(i));
        }
        return out;
      }
    }
  }

  out.kind = out.mobility->mobility >= 1 ? LinkageClass::NotClassifiedMobile
                                         : LinkageClass::PresumedRigid;
  return out;
}

ClassLabel classify_5_RP(const Linkage& L, double tol, uint64_t seed) {
  int nP = L.count(JointKind::Prismatic), nR = L.count(JointKind::Revolute);
  if (L.size() != 5 || nP + nR != 5 || nP < 1)
    throw CensusError("classify_5_RP: expected five R/P joints with a P-joint, got " + L.census());
  ClassLabel out;
  if (auto deg = detect_degenerate(L, tol)) {
    out.kind = LinkageClass::Degenerate;
    out.witness.degeneracy = *deg;
    return out;
  }
  out.mobility = mobility_report(L, seed);
  auto raxes = axes_of(L);

  Witness w;
  if (all_axes_parallel(raxes, tol, w)) {
    out.kind = LinkageClass::PlanarAllParallel;
    out.witness = w;
    return out;
  }
  if (nP >= 2) {
    // two or more P-joints force parallel rotation axes in the mobile case
    out.witness.notes.push_back("two or more P-joints but rotation axes are not all parallel");
    out.kind = LinkageClass::PresumedRigid;
    return out;
  }

  int p_at = 0;
  while (L.joints[p_at].kind != JointKind::Prismatic) ++p_at;
  Linkage S = L.cycled(p_at);
  if (same_unoriented_direction(S.joints[1].axis.dir, S.joints[2].axis.dir, tol) &&
      same_unoriented_direction(S.joints[3].axis.dir, S.joints[4].axis.dir, tol)) {
    out.kind = LinkageClass::PrrrrTwoParallelPairs;
    out.witness.cyclic_shift = p_at;
    out.witness.parallel_pairs = {{(p_at + 1) % 5, (p_at + 2) % 5},
                                  {(p_at + 3) % 5, (p_at + 4) % 5}};
    out.witness.notes.push_back(
        "with orientations aligned (p2 = p3, p4 = p5) the configuration curve satisfies "
        "t2 = -t3 and t4 = -t5");
    return out;
  }
  out.kind = LinkageClass::PresumedRigid;
  return out;
}

ClassLabel classify_5_RPH(const Linkage& L, double tol, uint64_t seed) {
  int nH = L.count(JointKind::Helical), nP = L.count(JointKind::Prismatic),
      nR = L.count(JointKind::Revolute);
  if (L.size() != 5 || nH + nP + nR != 5 || nH < 1)
    throw CensusError("classify_5_RPH: expected five R/P/H joints with an H-joint, got " +
                      L.census());
  ClassLabel out;
  if (auto deg = detect_degenerate(L, tol)) {
    out.kind = LinkageClass::Degenerate;
    out.witness.degeneracy = *deg;
    return out;
  }
  out.mobility = mobility_report(L, seed);
  auto axes = axes_of(L);

  Witness w;
  if (all_axes_parallel(axes, tol, w)) {
    out.kind = LinkageClass::H5AllParallel;
    out.witness = w;
  } else if (nP == 1) {
    int p_at = 0;
    while (L.joints[p_at].kind != JointKind::Prismatic) ++p_at;
    Linkage S = L.cycled(p_at);
    if (same_unoriented_direction(S.joints[1].axis.dir, S.joints[2].axis.dir, tol) &&
        same_unoriented_direction(S.joints[3].axis.dir, S.joints[4].axis.dir, tol)) {
      out.kind = LinkageClass::H5OnePTwoPairs;
      out.witness.cyclic_shift = p_at;
      out.witness.parallel_pairs = {{(p_at + 1) % 5, (p_at + 2) % 5},
                                    {(p_at + 3) % 5, (p_at + 4) % 5}};
    } else {
      out.kind = LinkageClass::PresumedRigid;
    }
  } else {
    out.kind = LinkageClass::PresumedRigid;
  }

  bool mobile_label = out.kind != LinkageClass::PresumedRigid;
  bool mobile_numeric = out.mobility->mobility >= 1;
  if (mobile_label != mobile_numeric)
    throw CrossCheckError("classify_5_RPH: label " + to_string(out.kind) +
                              " disagrees with numerical mobility " +
                              std::to_string(out.mobility->mobility),
                          out.kind, out.mobility->mobility);
  return out;
}

ClassLabel facts_4(const Linkage& L, double tol, uint64_t seed) {
  // CRP predicate: any movable CRP linkage is degenerate
  if (L.size() == 3 && L.count(JointKind::Cylindrical) == 1 &&
      L.count(JointKind::Revolute) == 1 && L.count(JointKind::Prismatic) == 1) {
    const Joint* c = nullptr;
    const Joint* r = nullptr;
    const Joint* p = nullptr;
    for (const auto& j : L.joints) {
      if (j.kind == JointKind::Cylindrical) c = &j;
      if (j.kind == JointKind::Revolute) r = &j;
      if (j.kind == JointKind::Prismatic) p = &j;
    }
    ClassLabel out;
    if (same_line(c->axis, r->axis, tol)) {
      out.kind = LinkageClass::Degenerate;
      out.witness.degeneracy = "CR: cylindrical and revolute axes coincide";
    } else if (same_unoriented_direction(c->axis.dir, p->direction, tol)) {
      out.kind = LinkageClass::Degenerate;
      out.witness.degeneracy = "CP: cylindrical axis parallel to prismatic direction";
    } else {
      out.kind = LinkageClass::PresumedRigid;
      out.witness.notes.push_back("nondegenerate CRP linkage is immobile");
    }
    return out;
  }

  int nP = L.count(JointKind::Prismatic), nR = L.count(JointKind::Revolute);
  if (L.size() != 4 || nP + nR != 4)
    throw CensusError("facts_4: expected four R/P joints, got " + L.census());
  ClassLabel out;
  if (auto deg = detect_degenerate(L, tol)) {
    out.kind = LinkageClass::Degenerate;
    out.witness.degeneracy = *deg;
    return out;
  }
  out.mobility = mobility_report(L, seed);
  auto axes = axes_of(L);

  Witness w;
  if (all_axes_parallel(axes, tol, w)) {
    out.kind = LinkageClass::PlanarAllParallel;
    out.witness = w;
    return out;
  }
  if (nP > 0) {
    out.kind = LinkageClass::PresumedRigid;
    out.witness.notes.push_back("P-joint present but rotation axes not all parallel");
    return out;
  }

  ConcurrencyFit fit = fit_common_point(axes);
  if (fit.rms <= tol * axis_scale(axes)) {
    out.kind = LinkageClass::SphericalConcurrent;
    out.witness.common_point = fit.point;
    out.witness.concurrency_rms = fit.rms;
    return out;
  }

  bool neighbours_skew = true;
  for (int i = 0; i < 4; ++i)
    if (is_parallel(axes[i], axes[(i + 1) % 4], tol)) neighbours_skew = false;
  if (neighbours_skew) {
    bool all_zero = true;
    for (int i = 0; i < 4; ++i) {
      double o = offset(axes[i], axes[(i + 1) % 4], axes[(i + 2) % 4], tol);
      out.witness.offset_triples.push_back(i);
      out.witness.offsets.push_back(o);
      if (std::abs(o) > tol) all_zero = false;
    }
    if (all_zero) {
      out.kind = LinkageClass::Bennett;
      return out;
    }
  }
  out.kind = out.mobility->mobility >= 1 ? LinkageClass::NotClassifiedMobile
                                         : LinkageClass::PresumedRigid;
  return out;
}

ClassLabel classify(const Linkage& L, double tol, uint64_t seed) {
  int n = L.size();
  int nR = L.count(JointKind::Revolute), nP = L.count(JointKind::Prismatic),
      nH = L.count(JointKind::Helical), nC = L.count(JointKind::Cylindrical);
  if (n == 3 && nC == 1 && nR == 1 && nP == 1) return facts_4(L, tol, seed);
  if (n == 4 && nR + nP == 4) return facts_4(L, tol, seed);
  if (n == 5 && nR == 5) return classify_5R(L, tol, seed);
  if (n == 5 && nR + nP == 5 && nP >= 1) return classify_5_RP(L, tol, seed);
  if (n == 5 && nR + nP + nH == 5 && nH >= 1) return classify_5_RPH(L, tol, seed);
  throw CensusError("classify: unsupported joint census " + L.census());
}

}  // namespace linkforge
