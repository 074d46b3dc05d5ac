#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "linkforge/geometry.hpp"
#include "support/test_support.hpp"

using namespace linkforge;
using namespace lftest;

TEST_CASE("parallelism") {
  Line h = Line::through(Vec3(1, 2, 3), Vec3(0.3, -0.2, 1.0));
  CHECK(is_parallel(h, h));
  Line z = Line::through(Vec3::Zero(), Vec3(0, 0, 1));
  Line x = Line::through(Vec3::Zero(), Vec3(1, 0, 0));
  CHECK_FALSE(is_parallel(z, x));
  // axes h3 = k and h4 = k + 2 eps j of the helical gallery entry
  Line h3(Vec3(0, 0, 1), Vec3::Zero());
  Line h4(Vec3(0, 0, 1), Vec3(0, 2, 0));
  CHECK(is_parallel(h3, h4));
}

TEST_CASE("common normal of the x-axis and a shifted j-line") {
  Line x = Line::through(Vec3::Zero(), Vec3(1, 0, 0));
  Line j1 = Line::through(Vec3(0, 0, 1), Vec3(0, 1, 0));
  CommonNormal cn = common_normal(x, j1);
  CHECK((cn.foot1 - Vec3(0, 0, 0)).norm() < 1e-14);
  CHECK((cn.foot2 - Vec3(0, 0, 1)).norm() < 1e-14);
  CHECK(cn.line.dir.cross(Vec3(0, 0, 1)).norm() < 1e-14);  // the z-axis
}

TEST_CASE("common normal of intersecting lines passes through the intersection") {
  Line a = Line::through(Vec3(1, 1, 0), Vec3(1, 0, 0));
  Line b = Line::through(Vec3(1, 1, 0), Vec3(0, 1, 0));
  CommonNormal cn = common_normal(a, b);
  CHECK((cn.foot1 - cn.foot2).norm() < 1e-13);
  CHECK((cn.foot1 - Vec3(1, 1, 0)).norm() < 1e-13);
}

TEST_CASE("common normal feet realize the minimum distance") {
  auto g = rng(21);
  for (int i = 0; i < 25; ++i) {
    Line a = random_line(g), b = random_line(g);
    if (is_parallel(a, b, 1e-6)) continue;
    CommonNormal cn = common_normal(a, b);
    double d = (cn.foot1 - cn.foot2).norm();
    Vec3 pa, pb;
    double sampled = sampled_min_distance(a, b, &pa, &pb);
    CHECK(d <= sampled + 1e-6);
    CHECK(std::abs(d - sampled) < 1e-5 * (1 + d));
    CHECK((cn.foot1 - pa).norm() < 1e-4 * (1 + pa.norm()));
  }
  CHECK_THROWS_AS(common_normal(Line::through(Vec3(0, 0, 0), Vec3(0, 0, 1)),
                                Line::through(Vec3(1, 0, 0), Vec3(0, 0, 1))),
                  std::invalid_argument);
}

TEST_CASE("offset of coplanar lines is the distance of the intersection points") {
  auto g = rng(22);
  for (int i = 0; i < 50; ++i) {
    // three lines in the plane z = 0, pairwise non-parallel
    Vec3 p1 = random_point(g), p2 = random_point(g), p3 = random_point(g);
    p1.z() = p2.z() = p3.z() = 0;
    double a1 = uniform(g, 0, M_PI), a2 = a1 + uniform(g, 0.3, 1.2), a3 = a2 + uniform(g, 0.3, 1.2);
    Line h1 = Line::through(p1, Vec3(std::cos(a1), std::sin(a1), 0));
    Line h2 = Line::through(p2, Vec3(std::cos(a2), std::sin(a2), 0));
    Line h3 = Line::through(p3, Vec3(std::cos(a3), std::sin(a3), 0));
    double o = offset(h1, h2, h3);
    Vec3 i12 = common_normal(h1, h2).foot2;  // = intersection, lines are coplanar
    Vec3 i23 = common_normal(h2, h3).foot1;
    CHECK(std::abs(std::abs(o) - (i23 - i12).norm()) < 1e-9);
  }
}

TEST_CASE("offset of concurrent lines vanishes") {
  auto g = rng(23);
  Vec3 apex = random_point(g);
  Line h1 = Line::through(apex, random_unit(g));
  Line h2 = Line::through(apex, random_unit(g));
  Line h3 = Line::through(apex, random_unit(g));
  CHECK(std::abs(offset(h1, h2, h3)) < 1e-12);
}

TEST_CASE("offset sign follows the middle line orientation") {
  Line h1 = Line::through(Vec3::Zero(), Vec3(1, 0, 0));
  Line h2 = Line::through(Vec3::Zero(), Vec3(0, 0, 1));
  Line h3 = Line::through(Vec3(0, 0, 5), Vec3(0, 1, 0));
  CHECK(offset(h1, h2, h3) == doctest::Approx(5.0));
  CHECK(offset(h3, h2, h1) == doctest::Approx(-5.0));
  CHECK_THROWS_AS(offset(h2, h2, h3), std::invalid_argument);
}

TEST_CASE("axis angle and distance") {
  auto g = rng(24);
  Line h = random_line(g);
  auto ad = axis_angle_and_distance(h, h);
  CHECK(ad.angle == doctest::Approx(0));
  CHECK(ad.distance == doctest::Approx(0));
  Line x = Line::through(Vec3::Zero(), Vec3(1, 0, 0));
  Line j1 = Line::through(Vec3(0, 0, 1), Vec3(0, 1, 0));
  ad = axis_angle_and_distance(x, j1);
  CHECK(ad.angle == doctest::Approx(M_PI / 2));
  CHECK(ad.distance == doctest::Approx(1.0));
  Line pa = Line::through(Vec3(0, 0, 0), Vec3(0, 0, 1));
  Line pb = Line::through(Vec3(3, 4, 7), Vec3(0, 0, 1));
  ad = axis_angle_and_distance(pa, pb);
  CHECK(ad.angle == doctest::Approx(0));
  CHECK(ad.distance == doctest::Approx(5.0));
}

TEST_CASE("offset, angle and distance are displacement invariants") {
  auto g = rng(25);
  int done = 0;
  while (done < 500) {
    Line h1 = random_line(g), h2 = random_line(g), h3 = random_line(g);
    if (is_parallel(h1, h2, 1e-6) || is_parallel(h2, h3, 1e-6)) continue;
    ++done;
    DQ d = random_displacement(g);
    Line m1 = transform_line(d, h1), m2 = transform_line(d, h2), m3 = transform_line(d, h3);
    CHECK(std::abs(offset(h1, h2, h3) - offset(m1, m2, m3)) < 1e-9 * (1 + std::abs(offset(h1, h2, h3))));
    auto a0 = axis_angle_and_distance(h1, h2);
    auto a1 = axis_angle_and_distance(m1, m2);
    CHECK(std::abs(a0.angle - a1.angle) < 1e-9);
    CHECK(std::abs(a0.distance - a1.distance) < 1e-9 * (1 + a0.distance));
  }
}

TEST_CASE("offset is stable under rotating the outer line about the middle one") {
  auto g = rng(26);
  int done = 0;
  while (done < 200) {
    Line h1 = random_line(g), h2 = random_line(g), h3 = random_line(g);
    if (is_parallel(h1, h2, 1e-6) || is_parallel(h2, h3, 1e-6)) continue;
    double o = offset(h1, h2, h3);
    // rotate h3 about h2 by an angle != pi
    double t = std::tan(uniform(g, 0.1, 1.4));
    DQ rot = t * DQ::one() - h2.to_dq();
    Line h3r = transform_line(rot, h3);
    if (is_parallel(h2, h3r, 1e-6)) continue;
    ++done;
    CHECK(std::abs(offset(h1, h2, h3r) - o) < 1e-9 * (1 + std::abs(o)));
  }
}

TEST_CASE("offset is antisymmetric in the outer lines") {
  auto g = rng(28);
  int done = 0;
  while (done < 200) {
    Line h1 = random_line(g), h2 = random_line(g), h3 = random_line(g);
    if (is_parallel(h1, h2, 1e-6) || is_parallel(h2, h3, 1e-6)) continue;
    ++done;
    double o = offset(h1, h2, h3);
    CHECK(std::abs(offset(h3, h2, h1) + o) < 1e-9 * (1 + std::abs(o)));
  }
}

TEST_CASE("concurrency fit") {
  auto g = rng(27);
  Vec3 apex(0.4, -1.2, 2.0);
  std::vector<Line> lines;
  for (int i = 0; i < 5; ++i) lines.push_back(Line::through(apex, random_unit(g)));
  auto fit = fit_common_point(lines);
  CHECK((fit.point - apex).norm() < 1e-10);
  CHECK(fit.rms < 1e-10);
}
