#include "linkforge/construct.hpp"

#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace linkforge {

namespace {

double get_param(const std::map<std::string, double>& params, const std::string& key, double dflt) {
  auto it = params.find(key);
  return it == params.end() ? dflt : it->second;
}

Vec3 rotate_direction(const DQ& g, const Vec3& v) {
  Quat r = g.p * quat_from_vec(v) * g.p.conj();
  return vec_from_quat(r) / g.p.squared();
}

// i h i: the axis reflection used by the line-symmetric constructions.
DQ reflect_x(const DQ& h) {
  DQ I(Quat{0, 1, 0, 0}, Quat{});
  return I * h * I;
}

}  // namespace

CylindricalExtension cylindrical_extension(const Linkage& L) {
  CylindricalExtension out;
  out.linkage = L;
  for (int k = 0; k < L.size(); ++k) {
    if (L.joints[k].kind != JointKind::Helical) continue;
    out.c_indices.push_back(k);
    out.pitches.push_back(L.joints[k].pitch);
    out.linkage.joints[k] = Joint::cylindrical(L.joints[k].axis);
  }
  return out;
}

K0Chart sample_k0(const Linkage& L, const Configuration& base,
                  const std::vector<std::vector<double>>& angle_rows,
                  const std::vector<std::vector<double>>& translation_rows, int n_paths, int steps,
                  double steplen, uint64_t seed) {
  K0Chart chart;
  chart.seed = seed;
  TrackOptions opts;
  opts.steps = steps;
  opts.steplen = steplen;
  opts.angle_constraints = angle_rows;
  opts.translation_constraints = translation_rows;
  for (int p = 0; p < n_paths; ++p) {
    opts.seed = seed + 1000 * static_cast<uint64_t>(p) + 1;
    chart.paths.push_back(track_curve(L, base, Eigen::VectorXd(), opts));
  }
  // tangent dimension at a generic tracked point
  const Configuration& g = chart.paths.front().configurations.back();
  chart.dim = constrained_tangent_dim(L, g, angle_rows, translation_rows);
  return chart;
}

CarvingResult carve(const CarvingInput& in) {
  int m = static_cast<int>(in.c_indices.size());
  if (in.A.cols() != m)
    throw std::invalid_argument("carve: A must have one column per C-joint");
  if (static_cast<int>(in.pitches.size()) != m)
    throw std::invalid_argument("carve: one pitch per C-joint required");
  for (double g : in.pitches)
    if (g == 0.0) throw std::invalid_argument("carve: pitches must be nonzero");
  for (int idx : in.c_indices)
    if (in.linkage.joints.at(idx).kind != JointKind::Cylindrical)
      throw std::invalid_argument("carve: designated joint is not cylindrical");
  if (in.chart.paths.empty()) throw std::invalid_argument("carve: empty K0 chart");

  // every row of A must annihilate the unwrapped angles and s/g on samples
  for (int r = 0; r < in.A.rows(); ++r) {
    for (size_t p = 0; p < in.chart.paths.size(); ++p) {
      const CurveSample& path = in.chart.paths[p];
      double a0 = 0, w0 = 0;
      for (size_t s = 0; s < path.configurations.size(); ++s) {
        double av = 0, wv = 0;
        for (int c = 0; c < m; ++c) {
          av += in.A(r, c) * path.angles[s][in.c_indices[c]];
          wv += in.A(r, c) * path.translations[s][in.c_indices[c]] / in.pitches[c];
        }
        if (s == 0) {
          a0 = av;
          w0 = wv;
          continue;
        }
        if (std::abs(av - a0) > in.check_tol)
          throw AnnihilationError("carve: row " + std::to_string(r) +
                                      " does not annihilate the angle functions (deviation " +
                                      std::to_string(std::abs(av - a0)) + ")",
                                  r, static_cast<int>(p), static_cast<int>(s), std::abs(av - a0));
        if (std::abs(wv - w0) > in.check_tol)
          throw AnnihilationError("carve: row " + std::to_string(r) +
                                      " does not annihilate s/g (deviation " +
                                      std::to_string(std::abs(wv - w0)) + ")",
                                  r, static_cast<int>(p), static_cast<int>(s), std::abs(wv - w0));
      }
    }
  }

  CarvingResult out;
  out.linkage = in.linkage;
  for (int c = 0; c < m; ++c)
    out.linkage.joints[in.c_indices[c]] =
        Joint::helical(in.linkage.joints[in.c_indices[c]].axis, in.pitches[c]);
  Eigen::MatrixXd Ad = in.A.cast<double>();
  out.a_rank = static_cast<int>(Eigen::FullPivLU<Eigen::MatrixXd>(Ad).rank());
  out.k0_dim = in.chart.dim;
  out.bound = in.chart.dim - m + out.a_rank;
  return out;
}

Linkage freeze_family(const Linkage& L, FreezeKind which,
                      const std::vector<std::pair<int, double>>& values) {
  Configuration x = initial_configuration(L);
  std::vector<bool> frozen(L.size(), false);
  for (auto [idx, v] : values) {
    if (idx < 0 || idx >= L.size() || L.joints[idx].kind != JointKind::Cylindrical)
      throw std::invalid_argument("freeze_family: index " + std::to_string(idx) +
                                  " is not a C-joint");
    frozen[idx] = true;
    if (which == FreezeKind::Translations) {
      x.joints[idx].s = v;
    } else if (std::isinf(v)) {
      x.joints[idx].t0 = 1.0;
      x.joints[idx].t1 = 0.0;
    } else {
      double n = std::hypot(v, 1.0);
      x.joints[idx].t0 = v / n;
      x.joints[idx].t1 = 1.0 / n;
    }
  }

  Linkage out;
  DQ M = DQ::one();
  for (int k = 0; k < L.size(); ++k) {
    const Joint& j = L.joints[k];
    Joint nj;
    if (frozen[k]) {
      nj = which == FreezeKind::Translations
               ? Joint::revolute(transform_line(M, j.axis))
               : Joint::prismatic(rotate_direction(M, j.axis.dir));
    } else {
      switch (j.kind) {
        case JointKind::Revolute: nj = Joint::revolute(transform_line(M, j.axis)); break;
        case JointKind::Cylindrical: nj = Joint::cylindrical(transform_line(M, j.axis)); break;
        case JointKind::Helical: nj = Joint::helical(transform_line(M, j.axis), j.pitch); break;
        case JointKind::Prismatic: nj = Joint::prismatic(rotate_direction(M, j.direction)); break;
      }
    }
    out.joints.push_back(nj);
    M = M * joint_motion(j, x.joints[k]);
  }
  return out;
}

std::pair<Line, Line> bennett_completion(const Line& h1, const Line& h2, double a, double b) {
  if (a == 0.0 || (a == 1.0 && b == 0.0))
    throw std::invalid_argument("bennett: parameters must satisfy a != 0, (a,b) != (1,0)");
  // M(u) = (u - z1)(u - z2) with z1 = -(b + h2)/a, z2 = -h1
  DQ z1 = (-1.0 / a) * (b * DQ::one() + h2.to_dq());
  DQ z2 = -1.0 * h1.to_dq();
  DQ c1 = -1.0 * (z1 + z2);
  DQ c0 = z1 * z2;
  // remainder of M modulo the norm polynomial of z1
  double e1 = 2.0 * b / a, e0 = (b * b + 1.0) / (a * a);
  DQ r1 = c1 - e1 * DQ::one();
  DQ r0 = c0 - e0 * DQ::one();
  if (std::abs(r1.norm().re) < 1e-12)
    throw std::invalid_argument("bennett: degenerate base line pair");
  DQ w2 = -1.0 * (dq_inverse(r1) * r0);
  DQ w1 = -1.0 * c1 - w2;
  DQ h3 = w1;
  DQ h4 = a * w2 + b * DQ::one();
  double scale = std::max(coords_norm(h3), coords_norm(h4));
  if (std::abs(h3.p.w) + std::abs(h3.d.w) + std::abs(h4.p.w) + std::abs(h4.d.w) > 1e-9 * scale)
    throw std::runtime_error("bennett: factorization did not produce lines");
  return {line_from_dq(h3, 1e-9), line_from_dq(h4, 1e-9)};
}

namespace {

GalleryEntry make_bennett(const std::map<std::string, double>& params) {
  double a = get_param(params, "a", 2.0), b = get_param(params, "b", 1.0);
  Line h1 = Line::through(Vec3(0, 0, 0), Vec3(1, 0, 0));
  Line h2 = Line::through(Vec3(0, 0, 1), Vec3(0, 1, 0));
  auto [h3, h4] = bennett_completion(h1, h2, a, b);
  GalleryEntry e;
  e.name = "bennett";
  e.params = {{"a", a}, {"b", b}};
  e.linkage.joints = {Joint::revolute(h1), Joint::revolute(h2), Joint::revolute(h3),
                      Joint::revolute(h4)};
  ConfigCurve cc;
  cc.linkage = e.linkage;
  cc.joints = {{{0, 1}, {1}}, {{b, a}, {1}}, {{0, 1}, {1}}, {{b, a}, {1}}};
  e.curve = cc;
  return e;
}

GalleryEntry make_goldberg(const std::map<std::string, double>& params) {
  double a1 = get_param(params, "a1", 2.0), b1 = get_param(params, "b1", 1.0);
  double a2 = get_param(params, "a2", 3.0), b2 = get_param(params, "b2", -1.0);
  if (a1 * a2 == 1.0) throw std::invalid_argument("goldberg: a1*a2 = 1 is degenerate");
  Line h1 = Line::through(Vec3(0, 0, 0), Vec3(1, 0, 0));
  Line h2 = Line::through(Vec3(0, 0, 1), Vec3(0, 1, 0));
  auto [h3, g] = bennett_completion(h1, h2, a1, b1);
  auto [k3, k4] = bennett_completion(g, h3, a2, b2);

  // composite loop (h1, h2, h3, k3, k4) along
  //   t1 = u, t2 = w(u), t3 = (u z - 1 : u + z), t4 = -w(u), t5 = z(u)
  // with w = a1 u + b1, z = a2 (-w) + b2; relabelled by a cyclic shift of 2
  // so the vanishing offsets sit at the conventional positions.
  double z0 = b2 - a2 * b1, z1 = -a1 * a2;
  std::vector<Joint> joints = {Joint::revolute(h1), Joint::revolute(h2), Joint::revolute(h3),
                               Joint::revolute(k3), Joint::revolute(k4)};
  std::vector<JointCurve> curves = {{{0, 1}, {1}},
                                    {{b1, a1}, {1}},
                                    {{-1, z0, z1}, {z0, 1 + z1}},
                                    {{-b1, -a1}, {1}},
                                    {{z0, z1}, {1}}};
  GalleryEntry e;
  e.name = "goldberg";
  e.params = {{"a1", a1}, {"b1", b1}, {"a2", a2}, {"b2", b2}};
  ConfigCurve cc;
  for (int k = 0; k < 5; ++k) {
    e.linkage.joints.push_back(joints[(k + 2) % 5]);
    cc.joints.push_back(curves[(k + 2) % 5]);
  }
  cc.linkage = e.linkage;
  e.curve = cc;
  return e;
}

GalleryEntry make_planar_4r(const std::map<std::string, double>& params) {
  double d = get_param(params, "d", 2.0);
  double ex = get_param(params, "e", 0.7), f = get_param(params, "f", 1.5);
  Vec3 k(0, 0, 1);
  GalleryEntry e;
  e.name = "planar_4R";
  e.params = {{"d", d}, {"e", ex}, {"f", f}};
  // parallelogram: opposite sides equal, so the translating branch
  // (u, -u, u, -u) closes for every u
  e.linkage.joints = {Joint::revolute(Line::through(Vec3(0, 0, 0), k)),
                      Joint::revolute(Line::through(Vec3(d, 0, 0), k)),
                      Joint::revolute(Line::through(Vec3(d + ex, f, 0), k)),
                      Joint::revolute(Line::through(Vec3(ex, f, 0), k))};
  ConfigCurve cc;
  cc.linkage = e.linkage;
  cc.joints = {{{0, 1}, {1}}, {{0, -1}, {1}}, {{0, 1}, {1}}, {{0, -1}, {1}}};
  e.curve = cc;
  return e;
}

std::vector<Vec3> polygon_points(int n) {
  std::vector<Vec3> pts;
  for (int k = 0; k < n; ++k) {
    double th = 2.0 * M_PI * k / n + 0.15 * std::sin(2.3 * k + 0.4);
    double r = 1.0 + 0.2 * std::cos(1.7 * k + 0.9);
    pts.emplace_back(r * std::cos(th), r * std::sin(th), 0.0);
  }
  return pts;
}

GalleryEntry make_planar_5r() {
  GalleryEntry e;
  e.name = "planar_5R";
  Vec3 k(0, 0, 1);
  for (const auto& p : polygon_points(5)) e.linkage.joints.push_back(Joint::revolute(Line::through(p, k)));
  return e;
}

GalleryEntry make_spherical_5r() {
  GalleryEntry e;
  e.name = "spherical_5R";
  for (int k = 0; k < 5; ++k) {
    double th = 2.0 * M_PI * k / 5 + 0.2;
    Vec3 d(std::cos(th), std::sin(th), 0.7 + 0.1 * std::sin(3.0 * k + 1.0));
    e.linkage.joints.push_back(Joint::revolute(Line::through(Vec3::Zero(), d)));
  }
  return e;
}

GalleryEntry make_planar_nc(const std::map<std::string, double>& params) {
  int n = static_cast<int>(get_param(params, "n", 4.0));
  if (n < 3) throw std::invalid_argument("planar_nC: n >= 3 required");
  GalleryEntry e;
  e.name = "planar_nC";
  e.params = {{"n", static_cast<double>(n)}};
  Vec3 k(0, 0, 1);
  for (const auto& p : polygon_points(n)) e.linkage.joints.push_back(Joint::cylindrical(Line::through(p, k)));
  return e;
}

GalleryEntry make_planar_nh(const std::map<std::string, double>& params) {
  int n = static_cast<int>(get_param(params, "n", 4.0));
  double g = get_param(params, "g", 0.3);
  GalleryEntry base = make_planar_nc({{"n", static_cast<double>(n)}});
  GalleryEntry e;
  e.name = "planar_nH";
  e.params = {{"n", static_cast<double>(n)}, {"g", g}};
  for (const auto& j : base.linkage.joints) e.linkage.joints.push_back(Joint::helical(j.axis, g));
  CarveRecipe r;
  r.cylindrical = base.linkage;
  for (int k = 0; k < n; ++k) {
    r.c_indices.push_back(k);
    r.pitches.push_back(g);
  }
  r.A = Eigen::MatrixXi::Ones(1, n);
  e.recipe = r;
  return e;
}

std::vector<Line> hhrrr_axes() {
  // h1 = k - eps i, h2 = k + eps i, h3 = h5 = k, h4 = k + 2 eps j
  return {Line(Vec3(0, 0, 1), Vec3(-1, 0, 0)), Line(Vec3(0, 0, 1), Vec3(1, 0, 0)),
          Line(Vec3(0, 0, 1), Vec3(0, 0, 0)), Line(Vec3(0, 0, 1), Vec3(0, 2, 0)),
          Line(Vec3(0, 0, 1), Vec3(0, 0, 0))};
}

GalleryEntry make_ccrrr() {
  GalleryEntry e;
  e.name = "ccrrr";
  auto ax = hhrrr_axes();
  e.linkage.joints = {Joint::cylindrical(ax[0]), Joint::cylindrical(ax[1]), Joint::revolute(ax[2]),
                      Joint::revolute(ax[3]), Joint::revolute(ax[4])};
  return e;
}

GalleryEntry make_hhrrr() {
  GalleryEntry e;
  e.name = "hhrrr";
  auto ax = hhrrr_axes();
  double g1 = 1.0 / 17.0, g2 = -1.0 / 11.0;
  e.linkage.joints = {Joint::helical(ax[0], g1), Joint::helical(ax[1], g2), Joint::revolute(ax[2]),
                      Joint::revolute(ax[3]), Joint::revolute(ax[4])};
  e.params = {{"g1", g1}, {"g2", g2}};
  CarveRecipe r;
  r.cylindrical = make_ccrrr().linkage;
  r.c_indices = {0, 1};
  r.pitches = {g1, g2};
  // the closure identity s1 + s2 = 0 with these pitches couples the angles
  // as 11 a1 = 17 a2
  r.A.resize(1, 2);
  r.A << 11, -17;
  r.k0_angle_rows = {{11, -17, 0, 0, 0}};
  e.recipe = r;
  return e;
}

std::vector<Line> line_symmetric_base() {
  return {Line::through(Vec3(1, 0, 0), Vec3(0.2, 0.5, 1.0)),
          Line::through(Vec3(0, 1.2, 0.5), Vec3(1.0, -0.3, 0.4)),
          Line::through(Vec3(0.3, -0.8, 1.0), Vec3(-0.4, 1.0, 0.25))};
}

GalleryEntry make_line_symmetric_6c() {
  GalleryEntry e;
  e.name = "line_symmetric_6C";
  auto base = line_symmetric_base();
  for (const auto& h : base) e.linkage.joints.push_back(Joint::cylindrical(h));
  for (const auto& h : base)
    e.linkage.joints.push_back(Joint::cylindrical(line_from_dq(reflect_x(h.to_dq()), 1e-9)));
  return e;
}

GalleryEntry make_line_symmetric_6h(const std::map<std::string, double>& params) {
  double g1 = get_param(params, "g1", 0.3), g2 = get_param(params, "g2", 0.5),
         g3 = get_param(params, "g3", -0.4);
  GalleryEntry base = make_line_symmetric_6c();
  GalleryEntry e;
  e.name = "line_symmetric_6H";
  e.params = {{"g1", g1}, {"g2", g2}, {"g3", g3}};
  double gs[6] = {g1, g2, g3, g1, g2, g3};
  for (int k = 0; k < 6; ++k)
    e.linkage.joints.push_back(Joint::helical(base.linkage.joints[k].axis, gs[k]));
  CarveRecipe r;
  r.cylindrical = base.linkage;
  r.c_indices = {0, 1, 2, 3, 4, 5};
  r.pitches = {g1, g2, g3, g1, g2, g3};
  r.A.resize(3, 6);
  r.A << 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1;
  r.k0_angle_rows = {{1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}};
  r.k0_translation_rows = {{1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}};
  e.recipe = r;
  return e;
}

struct PairGeometry {
  Vec3 u;        // fixed translation direction, p2 + p4 normalized
  Line h2, h3, h4, h5;
  double kappa;  // s1 amplitude for the prismatic compensation
};

PairGeometry two_pair_geometry(double a, double phi, bool opposite_orientations) {
  Vec3 p2(0, 0, 1), p4(std::sin(phi), 0, std::cos(phi));
  Vec3 nh = p2.cross(p4).normalized();
  double c = p2.dot(p4), s = p2.cross(p4).norm();
  PairGeometry g;
  g.u = (p2 + p4).normalized();
  g.kappa = a * (1 - c) * std::sqrt(2 + 2 * c) / (2 * s);
  if (opposite_orientations) {
    // p3 = -p2, p5 = -p4 (helical pairs)
    g.h2 = Line::through(Vec3(0, 0, 0), p2);
    g.h3 = Line::through(-a * nh, -p2);
    g.h4 = Line::through(Vec3(1, 0, 0), p4);
    g.h5 = Line::through(Vec3(1, 0, 0) + a * nh, -p4);
  } else {
    // p3 = p2, p5 = p4 (revolute pairs)
    g.h2 = Line::through(Vec3(0, 0, 0), p2);
    g.h3 = Line::through(a * nh, p2);
    g.h4 = Line::through(Vec3(1.5, 0, 0), p4);
    g.h5 = Line::through(Vec3(1.5, 0, 0) - a * nh, p4);
  }
  return g;
}

GalleryEntry make_prrrr(const std::map<std::string, double>& params) {
  double a = get_param(params, "a", 1.0), phi = get_param(params, "phi", M_PI / 3);
  PairGeometry g = two_pair_geometry(a, phi, false);
  GalleryEntry e;
  e.name = "prrrr";
  e.params = {{"a", a}, {"phi", phi}};
  e.linkage.joints = {Joint::prismatic(g.u), Joint::revolute(g.h2), Joint::revolute(g.h3),
                      Joint::revolute(g.h4), Joint::revolute(g.h5)};
  ConfigCurve cc;
  cc.linkage = e.linkage;
  // s1 = kappa sin(2 arccot u) = 2 kappa u / (1 + u^2), t = (u, -u, u, -u)
  cc.joints = {{{0, 2 * g.kappa}, {1, 0, 1}},
               {{0, 1}, {1}},
               {{0, -1}, {1}},
               {{0, 1}, {1}},
               {{0, -1}, {1}}};
  e.curve = cc;
  return e;
}

GalleryEntry make_p4h(const std::map<std::string, double>& params) {
  double a = get_param(params, "a", 1.0), phi = get_param(params, "phi", M_PI / 3);
  double g2 = get_param(params, "g2", 0.4), g4 = get_param(params, "g4", -0.7);
  if (g2 == 0.0 || g4 == 0.0) throw std::invalid_argument("p4h: pitches must be nonzero");
  PairGeometry g = two_pair_geometry(a, phi, true);
  GalleryEntry e;
  e.name = "p4h";
  e.params = {{"a", a}, {"phi", phi}, {"g2", g2}, {"g4", g4}};
  e.linkage.joints = {Joint::prismatic(g.u), Joint::helical(g.h2, g2), Joint::helical(g.h3, g2),
                      Joint::helical(g.h4, g4), Joint::helical(g.h5, g4)};
  return e;
}

}  // namespace

Configuration p4h_configuration(const GalleryEntry& p4h, double psi) {
  if (p4h.name != "p4h") throw std::invalid_argument("p4h_configuration: wrong gallery entry");
  const Linkage& L = p4h.linkage;
  Configuration c = initial_configuration(L);
  for (int k = 1; k <= 4; ++k) c.joints[k].alpha = psi;
  // the four helical motions compose to a translation along the prismatic
  // direction; solve for the compensating s1
  DQ pair = DQ::one();
  for (int k = 1; k <= 4; ++k) pair = pair * joint_motion(L.joints[k], c.joints[k]);
  Vec3 tv = act_on_point(pair, Vec3::Zero());
  c.joints[0].s = tv.dot(L.joints[0].direction) / 2.0;
  return c;
}

Configuration line_symmetric_6c_configuration(const GalleryEntry& entry, uint64_t seed) {
  if (entry.linkage.size() != 6)
    throw std::invalid_argument("line_symmetric_6c_configuration: wrong entry");
  const Linkage& L = entry.linkage;

  // Solve x i + i x = 0 for the half-product x = m1 m2 m3 in the chart
  // y = (a1, a2, a3, s1, s2, s3); the mirrored half then closes the loop.
  auto half_config = [&](const Eigen::VectorXd& y) {
    Configuration c = initial_configuration(L);
    for (int k = 0; k < 3; ++k) {
      c.joints[k].t0 = std::cos(y[k] / 2);
      c.joints[k].t1 = std::sin(y[k] / 2);
      c.joints[k].s = y[3 + k];
      c.joints[3 + k].t0 = std::cos(-y[k] / 2);
      c.joints[3 + k].t1 = std::sin(-y[k] / 2);
      c.joints[3 + k].s = -y[3 + k];
    }
    return c;
  };
  auto conditions = [&](const Eigen::VectorXd& y) {
    Configuration c = half_config(y);
    DQ x = DQ::one();
    for (int k = 0; k < 3; ++k) x = x * joint_motion(L.joints[k], c.joints[k]);
    double n = coords_norm(x);
    Eigen::Vector4d f;
    f << x.p.w / n, x.p.x / n, x.d.w / n, x.d.x / n;
    return f;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::VectorXd y(6);
    for (int i = 0; i < 6; ++i) y[i] = uni(rng) * (i < 3 ? 1.5 : 2.0);
    bool ok = false;
    for (int it = 0; it < 120; ++it) {
      Eigen::Vector4d f = conditions(y);
      if (f.norm() < 1e-13) {
        ok = true;
        break;
      }
      Eigen::MatrixXd J(4, 6);
      for (int c = 0; c < 6; ++c) {
        Eigen::VectorXd yp = y, ym = y;
        yp[c] += 1e-7;
        ym[c] -= 1e-7;
        J.col(c) = (conditions(yp) - conditions(ym)) / 2e-7;
      }
      Eigen::BDCSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
      svd.setThreshold(1e-10);
      y -= svd.solve(f);
    }
    if (ok) return half_config(y);
  }
  throw std::runtime_error("line_symmetric_6c_configuration: Newton did not converge");
}

CarvingInput carving_input_from_recipe(const CarveRecipe& recipe, int n_paths, int steps,
                                       double steplen, uint64_t seed) {
  CarvingInput in;
  in.linkage = recipe.cylindrical;
  in.c_indices = recipe.c_indices;
  in.A = recipe.A;
  in.pitches = recipe.pitches;
  in.chart = sample_k0(recipe.cylindrical, initial_configuration(recipe.cylindrical),
                       recipe.k0_angle_rows, recipe.k0_translation_rows, n_paths, steps, steplen,
                       seed);
  return in;
}

GalleryEntry gallery(const std::string& name, const std::map<std::string, double>& params) {
  if (name == "bennett") return make_bennett(params);
  if (name == "goldberg") return make_goldberg(params);
  if (name == "planar_4R") return make_planar_4r(params);
  if (name == "planar_5R") return make_planar_5r();
  if (name == "spherical_5R") return make_spherical_5r();
  if (name == "planar_nC") return make_planar_nc(params);
  if (name == "planar_nH") return make_planar_nh(params);
  if (name == "ccrrr") return make_ccrrr();
  if (name == "hhrrr") return make_hhrrr();
  if (name == "line_symmetric_6C") return make_line_symmetric_6c();
  if (name == "line_symmetric_6H") return make_line_symmetric_6h(params);
  if (name == "p4h") return make_p4h(params);
  if (name == "prrrr") return make_prrrr(params);
  throw std::invalid_argument("gallery: unknown name '" + name + "'");
}

std::vector<std::string> gallery_names() {
  return {"bennett",           "goldberg",          "planar_4R", "planar_5R", "spherical_5R",
          "planar_nC",         "planar_nH",         "ccrrr",     "hhrrr",     "prrrr",
          "line_symmetric_6C", "line_symmetric_6H", "p4h"};
}

}  // namespace linkforge
