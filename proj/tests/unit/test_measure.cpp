#include <doctest.h>

#include "makai/measure.hpp"

#include <cmath>
#include <random>

using namespace makai;

namespace {

Polytope unit_square() {
  return Polytope::from_vertices(
      2, {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(1, 1, 0), Vec3(0, 1, 0)});
}

Polytope random_convex_polygon(std::uint64_t seed, int k = 16) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  while (true) {
    std::vector<Vec3> pts;
    for (int i = 0; i < k; ++i) {
      double x, y;
      do {
        x = unif(rng);
        y = unif(rng);
      } while (x * x + y * y > 1.0);
      pts.emplace_back(x, y, 0.0);
    }
    Polytope P = Polytope::from_vertices(2, pts);
    if (P.vertices().size() >= 5) return P;
  }
}

Simplex seg01() {
  Simplex s;
  s.dim = 1;
  s.v[0] = Vec3(0, 0, 0);
  s.v[1] = Vec3(1, 0, 0);
  return s;
}

} // namespace

TEST_CASE("simplex_linear_power: elementary integrals") {
  const double v1[] = {0.0, 1.0};
  CHECK(simplex_linear_power(seg01(), v1, 2.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));

  Simplex t;
  t.dim = 2;
  t.v[0] = Vec3(0, 0, 0);
  t.v[1] = Vec3(1, 0, 0);
  t.v[2] = Vec3(0, 1, 0);
  const double vy[] = {0.0, 0.0, 1.0};  // the affine function y
  CHECK(simplex_linear_power(t, vy, 2.0) ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-13));

  const double vc[] = {0.7, 0.7, 0.7};
  CHECK(simplex_linear_power(t, vc, 3.2) ==
        doctest::Approx(std::pow(0.7, 3.2) * 0.5).epsilon(1e-12));
}

TEST_CASE("simplex_linear_power: domain errors") {
  const double bad[] = {-0.5, 1.0};
  CHECK_THROWS_AS(simplex_linear_power(seg01(), bad, 1.0), std::domain_error);
  const double ok[] = {0.5, 1.0};
  CHECK_THROWS_AS(simplex_linear_power(seg01(), ok, -1.0), std::domain_error);
}

TEST_CASE("kernel routes agree for integer exponents on random simplices") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> unif(0.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    Simplex s;
    s.dim = (trial % 2 == 0) ? 2 : 3;
    for (int k = 0; k <= s.dim; ++k)
      s.v[k] = Vec3(unif(rng), unif(rng), s.dim == 3 ? unif(rng) : 0.0);
    if (s.volume() < 1e-3) continue;
    std::vector<double> vals(s.dim + 1);
    for (auto& v : vals) v = unif(rng);
    for (int alpha : {1, 2, 3, 5}) {
      const double a = detail::symmetric_polynomial_route(s, vals, alpha);
      const double b = detail::divided_difference_route(s, vals, alpha);
      CHECK(a == doctest::Approx(b).epsilon(1e-10));
    }
  }
}

TEST_CASE("kernel confluent path handles clustered values") {
  Simplex t;
  t.dim = 2;
  t.v[0] = Vec3(0, 0, 0);
  t.v[1] = Vec3(1, 0, 0);
  t.v[2] = Vec3(0, 1, 0);
  // nearly coincident values against well-separated reference
  const double a = 0.5, eps = 1e-9;
  const double near_vals[] = {a, a + eps, 1.3};
  const double exact_vals[] = {a, a, 1.3};
  const double alpha = 2.7;
  const double x = simplex_linear_power(t, near_vals, alpha);
  const double y = simplex_linear_power(t, exact_vals, alpha);
  CHECK(x == doctest::Approx(y).epsilon(1e-8));
  // all three clustered
  const double all_near[] = {a, a + eps, a - eps};
  const double all_same[] = {a, a, a};
  CHECK(simplex_linear_power(t, all_near, alpha) ==
        doctest::Approx(simplex_linear_power(t, all_same, alpha))
            .epsilon(1e-8));
}

TEST_CASE("distance_moment: unit square closed forms") {
  Polytope P = unit_square();
  CHECK(distance_moment(P, 1.0).value ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(distance_moment(P, 2.0).value ==
        doctest::Approx(1.0 / 24.0).epsilon(1e-12));
  CHECK(distance_moment(P, 0.0).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("distance_moment vs Monte Carlo on random polygons") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    Polytope P = random_convex_polygon(seed);
    for (double alpha : {0.5, 1.0, 2.0, 3.7}) {
      const auto exact = distance_moment(P, alpha);
      const auto mc = distance_moment_mc(P, alpha, 200000, 1000 + seed);
      CHECK(std::abs(exact.value - mc.value) <= 3.0 * mc.error_estimate);
    }
  }
}

TEST_CASE("moment upper bound dominates the moment") {
  Polytope P = unit_square();
  CHECK(moment_upper_bound(P, 1.0) == doctest::Approx(0.25));
  CHECK(moment_upper_bound(P, 1.0) >= distance_moment(P, 1.0).value);
  CHECK(moment_upper_bound(P, 2.0) == doctest::Approx(1.0 / 12.0));
  CHECK(moment_upper_bound(P, 2.0) >= distance_moment(P, 2.0).value);

  for (std::uint64_t seed : {11u, 12u}) {
    Polytope Q = random_convex_polygon(seed);
    for (double alpha : {0.5, 1.0, 2.0})
      CHECK(moment_upper_bound(Q, alpha) >=
            distance_moment(Q, alpha).value * (1.0 - 1e-12));
  }
  Polytope B = make_box(3, Vec3(0, 0, 0), Vec3(2, 1, 1));
  for (double alpha : {0.5, 1.0, 2.0})
    CHECK(moment_upper_bound(B, alpha) >=
          distance_moment(B, alpha).value * (1.0 - 1e-12));
}

TEST_CASE("slab moments approach the upper bound as L grows") {
  const double alpha = 2.0;
  double prev_ratio = 1e300;
  for (double L : {2.0, 4.0, 8.0}) {
    Polytope S = make_slab(2, L);
    const double ratio =
        moment_upper_bound(S, alpha) / distance_moment(S, alpha).value;
    CHECK(ratio >= 1.0);
    CHECK(ratio < prev_ratio);
    prev_ratio = ratio;
  }
  CHECK(prev_ratio < 1.4);  // already close at L = 8
}

TEST_CASE("makai bound: unit square values") {
  Polytope P = unit_square();
  CHECK(makai_lower_bound(P, ExponentPair(2, 1)) ==
        doctest::Approx(24.0).epsilon(1e-9));
  CHECK(makai_lower_bound(P, ExponentPair(2, 2)) ==
        doctest::Approx(M_PI * M_PI).epsilon(1e-9));
}

TEST_CASE("hersch-protter bound: unit square values") {
  Polytope P = unit_square();
  CHECK(hersch_protter_bound(P, ExponentPair(2, 2)) ==
        doctest::Approx(M_PI * M_PI).epsilon(1e-9));
  CHECK(hersch_protter_bound(P, ExponentPair(2, 1)) ==
        doctest::Approx(12.0).epsilon(1e-9));
}

TEST_CASE("makai dominates hersch-protter for q < p") {
  for (std::uint64_t seed : {21u, 22u, 23u}) {
    Polytope P = random_convex_polygon(seed);
    for (auto [p, q] : {std::pair{2.0, 1.0}, {3.0, 2.0}, {4.0, 1.5}}) {
      ExponentPair e(p, q);
      CHECK(makai_lower_bound(P, e) >=
            hersch_protter_bound(P, e) * (1.0 - 1e-10));
    }
  }
}

TEST_CASE("scaling covariance of the moment") {
  Polytope P = random_convex_polygon(33);
  for (double s : {0.5, 2.0}) {
    Polytope Q = P.scaled_about_origin(s);
    for (double alpha : {1.0, 2.0, 3.7}) {
      const double lhs = distance_moment(Q, alpha).value;
      const double rhs =
          std::pow(s, 2.0 + alpha) * distance_moment(P, alpha).value;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("hersch-protter decays like 1/L on slabs for (2,1)") {
  // bound ~ 12/L: the slab inradius stays 1/2 while the area grows like L
  double prev = 1e300;
  for (double L : {2.0, 4.0, 8.0}) {
    Polytope S = make_slab(2, L);
    const double hp = hersch_protter_bound(S, ExponentPair(2, 1));
    CHECK(hp == doctest::Approx(12.0 / L).epsilon(1e-9));
    CHECK(hp < prev);
    prev = hp;
  }
}
