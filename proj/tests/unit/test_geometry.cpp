#include <doctest.h>

#include "makai/geometry.hpp"
#include "makai/geometry_json.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace makai;

namespace {

Polytope unit_square() {
  return Polytope::from_vertices(
      2, {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(1, 1, 0), Vec3(0, 1, 0)});
}

Polytope unit_cube_h() {
  std::vector<Halfspace> hs;
  for (int k = 0; k < 3; ++k) {
    Halfspace lo, hi;
    hi.normal = Vec3::Zero();
    hi.normal[k] = 1.0;
    hi.offset = 1.0;
    lo.normal = Vec3::Zero();
    lo.normal[k] = -1.0;
    lo.offset = 0.0;
    hs.push_back(hi);
    hs.push_back(lo);
  }
  return Polytope::from_halfspaces(3, hs);
}

Polytope random_convex_polygon(std::uint64_t seed, int k = 20) {
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

} // namespace

TEST_CASE("from_vertices: unit square canonical form") {
  Polytope P = unit_square();
  CHECK(P.dimension() == 2);
  CHECK(P.vertices().size() == 4);
  REQUIRE(P.facets().size() == 4);
  std::set<std::pair<int, int>> normals;
  for (const auto& h : P.facets()) {
    CHECK(std::abs(h.normal.norm() - 1.0) <= 1e-12);
    normals.insert({static_cast<int>(std::round(h.normal.x())),
                    static_cast<int>(std::round(h.normal.y()))});
  }
  CHECK(normals == std::set<std::pair<int, int>>{
                       {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  CHECK(P.volume() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("from_vertices: collinear points rejected") {
  CHECK_THROWS_AS(Polytope::from_vertices(
                      2, {Vec3(0, 0, 0), Vec3(1, 1, 0), Vec3(2, 2, 0)}),
                  GeometryError);
}

TEST_CASE("from_halfspaces: unit cube") {
  Polytope P = unit_cube_h();
  CHECK(P.vertices().size() == 8);
  REQUIRE(P.facets().size() == 6);
  for (const auto& fv : P.facet_vertices()) CHECK(fv.size() == 4);
  CHECK(P.volume() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("from_halfspaces: unbounded input rejected") {
  std::vector<Halfspace> hs = {{Vec3(1, 0, 0), 1.0}, {Vec3(0, 1, 0), 1.0}};
  CHECK_THROWS_AS(Polytope::from_halfspaces(2, hs), GeometryError);
}

TEST_CASE("distance: unit square probes") {
  Polytope P = unit_square();
  CHECK(P.distance(Vec3(0.5, 0.5, 0)) == doctest::Approx(0.5));
  CHECK(P.distance(Vec3(0, 0, 0)) == doctest::Approx(0.0));
  CHECK(P.distance(Vec3(0.25, 0.5, 0)) == doctest::Approx(0.25));
  CHECK(P.distance(Vec3(2, 0.5, 0)) == 0.0);
  CHECK_FALSE(P.contains(Vec3(2, 0.5, 0)));
}

TEST_CASE("inradius: square, right triangle, slabs") {
  CHECK(unit_square().inradius().r == doctest::Approx(0.5).epsilon(1e-9));

  Polytope T = Polytope::from_vertices(
      2, {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)});
  // oracle: r = 2 area / perimeter
  const double oracle = 2.0 * 0.5 / (2.0 + std::sqrt(2.0));
  auto ir = T.inradius();
  CHECK(ir.r == doctest::Approx(oracle).epsilon(1e-9));
  CHECK(T.distance(ir.center) == doctest::Approx(ir.r).epsilon(1e-9));

  for (double L : {1.0, 2.0, 4.0}) {
    CHECK(make_slab(2, L).inradius().r == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(make_slab(3, L).inradius().r == doctest::Approx(0.5).epsilon(1e-9));
  }
}

TEST_CASE("facet_partition: unit square -> four quarter triangles") {
  Polytope P = unit_square();
  auto cells = facet_partition(P);
  REQUIRE(cells.size() == 4);
  double total = 0.0;
  for (const auto& c : cells) {
    const double a = c.cell.volume();
    CHECK(a == doctest::Approx(0.25).epsilon(1e-9));
    total += a;
  }
  CHECK(total == doctest::Approx(P.volume()).epsilon(1e-9));
}

TEST_CASE("facet_partition: equilateral triangle cells meet at the incenter") {
  Polytope P = make_regular_ngon(3, 1.0);
  auto cells = facet_partition(P);
  REQUIRE(cells.size() == 3);
  const Vec3 incenter = P.inradius().center;
  double total = 0.0;
  for (const auto& c : cells) {
    total += c.cell.volume();
    bool has_incenter = false;
    for (const auto& v : c.cell.vertices())
      if ((v - incenter).norm() <= 1e-7) has_incenter = true;
    CHECK(has_incenter);
  }
  CHECK(total == doctest::Approx(P.volume()).epsilon(1e-9));
}

TEST_CASE("facet_partition: unit cube -> six pyramids of volume 1/6") {
  auto cells = facet_partition(unit_cube_h());
  REQUIRE(cells.size() == 6);
  for (const auto& c : cells)
    CHECK(c.cell.volume() == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
}

TEST_CASE("facet_partition: coverage and membership by sampling") {
  Polytope P = random_convex_polygon(7);
  auto cells = facet_partition(P);
  double total = 0.0;
  for (const auto& c : cells) total += c.cell.volume();
  CHECK(total == doctest::Approx(P.volume()).epsilon(1e-9));

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  int tested = 0;
  while (tested < 10000) {
    Vec3 x(unif(rng), unif(rng), 0.0);
    if (P.signed_margin(x) <= 1e-9) continue;
    ++tested;
    // nearest facet by the affine gap
    int best = 0;
    double bm = 1e300;
    for (size_t i = 0; i < P.facets().size(); ++i) {
      const double m = P.facets()[i].offset - P.facets()[i].normal.dot(x);
      if (m < bm) {
        bm = m;
        best = static_cast<int>(i);
      }
    }
    CHECK(cells[best].cell.contains(x, 1e-7));
  }
}

TEST_CASE("facet_partition: projection lands in the facet relative interior") {
  Polytope P = random_convex_polygon(21);
  auto cells = facet_partition(P);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  int tested = 0;
  while (tested < 500) {
    Vec3 x(unif(rng), unif(rng), 0.0);
    if (P.signed_margin(x) <= 1e-6) continue;
    int best = 0;
    double bm = 1e300;
    for (size_t i = 0; i < P.facets().size(); ++i) {
      const double m = P.facets()[i].offset - P.facets()[i].normal.dot(x);
      if (m < bm) {
        bm = m;
        best = static_cast<int>(i);
      }
    }
    // skip near-ties: on cell boundaries the projection may hit a facet corner
    double second = 1e300;
    for (size_t i = 0; i < P.facets().size(); ++i) {
      if (static_cast<int>(i) == best) continue;
      second = std::min(second, P.facets()[i].offset - P.facets()[i].normal.dot(x));
    }
    if (second - bm <= 1e-6) continue;
    ++tested;
    const auto& h = P.facets()[best];
    const Vec3 proj = x - (h.normal.dot(x) - h.offset) * h.normal;
    const auto& fv = P.facet_vertices()[best];
    const Vec3 w0 = P.vertices()[fv[0]], w1 = P.vertices()[fv[1]];
    const double t = (proj - w0).dot(w1 - w0) / (w1 - w0).squaredNorm();
    CHECK(t > -1e-9);
    CHECK(t < 1.0 + 1e-9);
  }
}

TEST_CASE("distance concavity on random convex bodies") {
  Polytope P = random_convex_polygon(31);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::uniform_real_distribution<double> lam(0.0, 1.0);
  int done = 0;
  while (done < 2000) {
    Vec3 x(unif(rng), unif(rng), 0.0), y(unif(rng), unif(rng), 0.0);
    if (!P.contains(x, 0.0) || !P.contains(y, 0.0)) continue;
    ++done;
    const double l = lam(rng);
    CHECK(P.distance(l * x + (1 - l) * y) >=
          l * P.distance(x) + (1 - l) * P.distance(y) - 1e-12);
  }
}

TEST_CASE("cell_height: unit square bottom facet") {
  Polytope P = unit_square();
  auto cells = facet_partition(P);
  // locate the bottom facet (normal (0,-1))
  int bottom = -1;
  for (size_t i = 0; i < P.facets().size(); ++i)
    if (P.facets()[i].normal.y() < -0.9) bottom = static_cast<int>(i);
  REQUIRE(bottom >= 0);
  const auto& c = cells[bottom];
  CHECK(cell_height(c, Vec3(0.5, 0, 0)) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(cell_height(c, Vec3(0.25, 0, 0)) ==
        doctest::Approx(0.25).epsilon(1e-9));
  CHECK_THROWS_AS(cell_height(c, Vec3(0, 0, 0)), GeometryError);       // relbd
  CHECK_THROWS_AS(cell_height(c, Vec3(0.5, 0.25, 0)), GeometryError);  // off
}

TEST_CASE("cell_height in 3D: cube pyramids") {
  Polytope cube = unit_cube_h();
  auto cells = facet_partition(cube);
  int bottom = -1;
  for (size_t i = 0; i < cube.facets().size(); ++i)
    if (cube.facets()[i].normal.z() < -0.9) bottom = static_cast<int>(i);
  REQUIRE(bottom >= 0);
  const auto& c = cells[bottom];
  // apex over the face center, sloping toward the face edges
  CHECK(cell_height(c, Vec3(0.5, 0.5, 0)) ==
        doctest::Approx(0.5).epsilon(1e-9));
  CHECK(cell_height(c, Vec3(0.25, 0.5, 0)) ==
        doctest::Approx(0.25).epsilon(1e-9));
  CHECK(cell_height(c, Vec3(0.25, 0.25, 0)) ==
        doctest::Approx(0.25).epsilon(1e-9));
  CHECK_THROWS_AS(cell_height(c, Vec3(0, 0.5, 0)), GeometryError);  // relbd
  CHECK_THROWS_AS(cell_height(c, Vec3(0.5, 0.5, 0.5)), GeometryError);
  // at each face center, the height equals the cube inradius exactly
  for (const auto& cell : cells) {
    const auto& fv = cube.facet_vertices()[cell.facet_index];
    Vec3 center = Vec3::Zero();
    for (int vi : fv) center += cube.vertices()[vi];
    center /= static_cast<double>(fv.size());
    CHECK(cell_height(cell, center) == doctest::Approx(0.5).epsilon(1e-9));
  }
}

TEST_CASE("cell_height is bounded by the inradius") {
  Polytope P = random_convex_polygon(12);
  const double r = P.inradius().r;
  auto cells = facet_partition(P);
  for (const auto& c : cells) {
    const auto& fv = P.facet_vertices()[c.facet_index];
    const Vec3 w0 = P.vertices()[fv[0]], w1 = P.vertices()[fv[1]];
    for (double t : {0.2, 0.5, 0.8}) {
      const Vec3 y = w0 + t * (w1 - w0);
      CHECK(cell_height(c, y) <= r + 1e-9);
    }
  }
}

TEST_CASE("inradius equals the deepest partition-cell vertex") {
  for (std::uint64_t seed : {3u, 8u, 15u}) {
    Polytope P = random_convex_polygon(seed);
    const double r = P.inradius().r;
    double best = 0.0;
    for (const auto& c : facet_partition(P))
      for (const auto& v : c.cell.vertices())
        best = std::max(best, P.distance(v));
    CHECK(best == doctest::Approx(r).epsilon(1e-9));
  }
}

TEST_CASE("triangulate: fan counts and coverage") {
  CHECK(unit_square().triangulate().size() == 4);
  // a simplex triangulates as itself
  Polytope T = Polytope::from_vertices(
      2, {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)});
  CHECK(T.triangulate().size() == 1);
  auto cube = unit_cube_h();
  CHECK(cube.triangulate().size() == 12);
  double vol = 0.0;
  for (const auto& s : cube.triangulate()) vol += s.volume();
  CHECK(vol == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("face lattice sanity in 2D/3D: facet boundaries touch >= 2 facets") {
  for (int dim : {2, 3}) {
    Polytope P = dim == 2 ? random_convex_polygon(44) : unit_cube_h();
    const double tol = P.tolerance();
    for (size_t i = 0; i < P.facets().size(); ++i) {
      const auto& fv = P.facet_vertices()[i];
      for (int vi : fv) {
        int count = 0;
        for (const auto& h : P.facets())
          if (std::abs(h.normal.dot(P.vertices()[vi]) - h.offset) <= 10 * tol)
            ++count;
        CHECK(count >= dim);  // a vertex lies on at least dim facets
      }
    }
    // distinct facets never meet a relative interior: their common points
    // are relbd vertices only (2D: shared vertices are edge endpoints)
    if (dim == 2) {
      for (size_t i = 0; i < P.facets().size(); ++i) {
        for (size_t j = i + 1; j < P.facets().size(); ++j) {
          const auto &fi = P.facet_vertices()[i], &fj = P.facet_vertices()[j];
          for (int vi : fi) {
            for (int vj : fj) {
              if (vi != vj) continue;
              const Vec3 w0 = P.vertices()[fi[0]], w1 = P.vertices()[fi[1]];
              const double t =
                  (P.vertices()[vi] - w0).dot(w1 - w0) / (w1 - w0).squaredNorm();
              CHECK((t <= 1e-7 || t >= 1.0 - 1e-7));  // endpoint, not interior
            }
          }
        }
      }
    }
  }
}

TEST_CASE("scaling a body scales offsets and vertices") {
  Polytope P = random_convex_polygon(5);
  Polytope Q = P.scaled_about_origin(2.0);
  CHECK(Q.volume() == doctest::Approx(4.0 * P.volume()).epsilon(1e-10));
  CHECK(Q.inradius().r == doctest::Approx(2.0 * P.inradius().r).epsilon(1e-9));
}

TEST_CASE("polytope JSON: either representation completes the other") {
  Polytope P = unit_square();
  nlohmann::json j = polytope_to_json(P);
  CHECK(j.contains("vertices"));
  CHECK(j.contains("halfspaces"));

  nlohmann::json only_h = {{"dimension", 2}, {"halfspaces", j["halfspaces"]}};
  Polytope Ph = polytope_from_json(only_h);
  CHECK(Ph.vertices().size() == 4);
  CHECK(Ph.volume() == doctest::Approx(1.0).epsilon(1e-9));

  nlohmann::json only_v = {{"dimension", 2}, {"vertices", j["vertices"]}};
  Polytope Pv = polytope_from_json(only_v);
  CHECK(Pv.facets().size() == 4);

  nlohmann::json bad = {{"dimension", 2}};
  CHECK_THROWS(polytope_from_json(bad));
}
