#include <doctest.h>

#include "makai/normal_coords.hpp"

#include <cmath>

using namespace makai;

TEST_CASE("curvature: circle and ellipse") {
  auto c = SmoothBody2D::circle(2.0);
  for (double s : {0.0, 1.0, 3.0, 6.0})
    CHECK(c.curvature(s) == doctest::Approx(0.5).epsilon(1e-12));

  auto e = SmoothBody2D::ellipse(2.0, 1.0);
  CHECK(e.curvature(0.0) == doctest::Approx(2.0 / 1.0).epsilon(1e-12));  // a/b^2
  CHECK(e.curvature(M_PI / 2) ==
        doctest::Approx(1.0 / 4.0).epsilon(1e-12));  // b/a^2
}

TEST_CASE("validation rejects non-convex and clockwise curves") {
  // clockwise circle
  CHECK_THROWS(SmoothBody2D(
      [](double s) { return Vec2(std::cos(-s), std::sin(-s)); },
      [](double s) { return Vec2(std::sin(-s), -std::cos(-s)); },
      [](double s) { return Vec2(std::cos(-s), std::sin(-s)); }));
}

TEST_CASE("boundary_distance: circle is exact") {
  auto c = SmoothBody2D::circle(1.0);
  CHECK(c.boundary_distance(Vec2(0, 0)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(c.boundary_distance(Vec2(0.5, 0)) ==
        doctest::Approx(0.5).epsilon(1e-9));
  CHECK(c.inside(Vec2(0.3, 0.4)));
  CHECK_FALSE(c.inside(Vec2(1.2, 0.0)));
}

TEST_CASE("cut_distance: circle radius, ellipse medial axis") {
  auto c = SmoothBody2D::circle(1.5);
  for (double s : {0.0, 0.7, 2.5})
    CHECK(c.cut_distance(s, 1e-8) == doctest::Approx(1.5).epsilon(1e-6));

  // for the 2x1 ellipse the medial axis is |x| <= 3/2 on the major axis
  auto e = SmoothBody2D::ellipse(2.0, 1.0);
  CHECK(e.cut_distance(0.0, 1e-8) == doctest::Approx(0.5).epsilon(2e-4));
  CHECK(e.cut_distance(M_PI / 2, 1e-8) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("cut_distance consistency: d(gamma + l nu) = l, beyond it drops") {
  auto e = SmoothBody2D::ellipse(1.7, 0.9);
  const double tol = 1e-7;
  for (double s : {0.3, 1.1, 2.0, 4.4}) {
    const double l = e.cut_distance(s, tol);
    CHECK(l > 0.0);
    const Vec2 z = e.point(s) + l * e.inward_normal(s);
    CHECK(std::abs(e.boundary_distance(z) - l) <= 2e-6);
    const double beyond = l + 10 * tol;
    const Vec2 zb = e.point(s) + beyond * e.inward_normal(s);
    CHECK(e.boundary_distance(zb) < beyond);
  }
}

TEST_CASE("weight positivity along the chart") {
  auto e = SmoothBody2D::ellipse(2.0, 1.0);
  for (double s : {0.0, 0.5, 1.3, 3.0, 5.5}) {
    const auto chart = normal_chart(e, s);
    const int N = 50;
    for (int j = 0; j < N; ++j) {
      const double t = chart.cut * (j + 0.5) / N;
      if (t < chart.cut - 1e-6) CHECK(chart.weight(t) > 0.0);
    }
  }
}

TEST_CASE("cov_integral: areas of circle and ellipse") {
  auto c = SmoothBody2D::circle(1.0);
  const double area_c =
      cov_integral(c, [](const Vec2&) { return 1.0; }, 512, 512);
  CHECK(std::abs(area_c - M_PI) <= 1e-3);

  auto e = SmoothBody2D::ellipse(2.0, 1.0);
  const double area_e =
      cov_integral(e, [](const Vec2&) { return 1.0; }, 512, 512);
  CHECK(std::abs(area_e - 2.0 * M_PI) <= 1e-3);
}

TEST_CASE("cov_integral: distance-squared moment on the unit disk") {
  auto c = SmoothBody2D::circle(1.0);
  const double v = cov_integral(
      c, [&](const Vec2& x) { return std::pow(1.0 - x.norm(), 2.0); }, 256,
      256);
  CHECK(v == doctest::Approx(M_PI / 6.0).epsilon(1e-4));
}

TEST_CASE("cov_integral: error halves (at least) when the grid doubles") {
  // area integrands are periodic-smooth in s and linear in t, so the
  // midpoint error sits at the cut-distance noise floor (~1e-9); the halving
  // claim is asserted above that floor
  auto e = SmoothBody2D::ellipse(2.0, 1.0);
  double prev_err = -1.0;
  for (int n : {64, 128, 256}) {
    const double v = cov_integral(e, [](const Vec2&) { return 1.0; }, n, n);
    const double err = std::abs(v - 2.0 * M_PI);
    if (prev_err > 0.0) CHECK(err <= 0.5 * prev_err + 1e-8);
    prev_err = err;
  }
  // a d^2-type integrand has genuine O(n^-2) midpoint error in t
  auto c = SmoothBody2D::circle(1.0);
  prev_err = -1.0;
  for (int n : {8, 16, 32, 64}) {
    const double v = cov_integral(
        c, [&](const Vec2& x) { return std::pow(1.0 - x.norm(), 2.0); }, 64,
        n);
    const double err = std::abs(v - M_PI / 6.0);
    if (prev_err > 0.0) CHECK(err <= 0.5 * prev_err + 1e-10);
    prev_err = err;
  }
}

TEST_CASE("cov_integral of d^alpha vs direct grid quadrature on the ellipse") {
  auto e = SmoothBody2D::ellipse(2.0, 1.0);
  const double alpha = 1.5;
  const double via_cov = cov_integral(
      e, [&](const Vec2& x) { return std::pow(e.boundary_distance(x), alpha); },
      512, 128);
  // direct midpoint quadrature over the bounding box
  const int N = 600;
  double direct = 0.0;
  const double dx = 4.0 / N, dy = 2.0 / (N / 2);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N / 2; ++j) {
      const Vec2 x(-2.0 + (i + 0.5) * dx, -1.0 + (j + 0.5) * dy);
      if (x.x() * x.x() / 4.0 + x.y() * x.y() > 1.0) continue;
      direct += std::pow(e.boundary_distance(x), alpha) * dx * dy;
    }
  }
  CHECK(via_cov == doctest::Approx(direct).epsilon(1e-3));
}

TEST_CASE("max cut distance equals the inradius on symmetric bodies") {
  auto e = SmoothBody2D::ellipse(2.0, 1.0);
  double max_l = 0.0;
  for (int k = 0; k < 64; ++k)
    max_l = std::max(max_l, e.cut_distance(2.0 * M_PI * k / 64, 1e-7));
  CHECK(max_l == doctest::Approx(e.inradius_estimate()).epsilon(1e-4));
  CHECK(e.inradius_estimate() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("weighted_quotient_check: circle, ellipse, flat weight") {
  auto c = SmoothBody2D::circle(1.0);
  auto r = weighted_quotient_check(c, 0.7, 2.0, 400);
  CHECK(r.pass);
  auto e = SmoothBody2D::ellipse(2.0, 1.0);
  CHECK(weighted_quotient_check(e, 0.0, 2.0, 400).pass);
  CHECK(weighted_quotient_check(e, 1.9, 3.0, 400).pass);
}

TEST_CASE("hp_smooth_check: disk at p = 2 reproduces the Bessel gap") {
  auto c = SmoothBody2D::circle(1.0);
  auto rep = hp_smooth_check(c, 2.0, 64, 0.08);
  CHECK(rep.pass);
  CHECK(rep.left == doctest::Approx(M_PI * M_PI / 4.0).epsilon(1e-4));
  // lambda_2(disk) = j0^2 with j0 the first Bessel zero; the inscribed
  // 64-gon plus discretization put the bound a bit above it
  const double j0 = 2.404825557695773;
  CHECK(rep.right >= j0 * j0 - 1e-9);
  CHECK(rep.right <= j0 * j0 * 1.05);
}

TEST_CASE("from_samples reproduces a sampled ellipse") {
  std::vector<Vec2> pts;
  const int n = 256;
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * M_PI * k / n;
    pts.emplace_back(1.4 * std::cos(s), 0.8 * std::sin(s));
  }
  auto body = SmoothBody2D::from_samples(pts);
  CHECK(body.curvature(0.0) ==
        doctest::Approx(1.4 / (0.8 * 0.8)).epsilon(1e-3));
  CHECK(body.boundary_distance(Vec2(0, 0)) ==
        doctest::Approx(0.8).epsilon(1e-4));
  const double area =
      cov_integral(body, [](const Vec2&) { return 1.0; }, 256, 128);
  CHECK(area == doctest::Approx(M_PI * 1.4 * 0.8).epsilon(1e-3));
}
