#include <doctest.h>

#include "makai/lp.hpp"

#include <cmath>
#include <random>

using namespace makai;

TEST_CASE("lp: simple box maximum") {
  Eigen::MatrixXd A(4, 2);
  A << 1, 0, 0, 1, -1, 0, 0, -1;
  Eigen::VectorXd b(4);
  b << 1, 2, 0, 0;
  Eigen::VectorXd c(2);
  c << 1, 1;
  auto r = lp::solve_max(A, b, c);
  REQUIRE(r.status == lp::Status::optimal);
  CHECK(r.value == doctest::Approx(3.0));
  CHECK(r.x[0] == doctest::Approx(1.0));
  CHECK(r.x[1] == doctest::Approx(2.0));
}

TEST_CASE("lp: unboundedness detected") {
  Eigen::MatrixXd A(1, 2);
  A << 0, 1;
  Eigen::VectorXd b(1);
  b << 1;
  Eigen::VectorXd c(2);
  c << 1, 0;
  auto r = lp::solve_max(A, b, c);
  CHECK(r.status == lp::Status::unbounded);
}

TEST_CASE("lp: infeasibility detected") {
  Eigen::MatrixXd A(2, 1);
  A << 1, -1;
  Eigen::VectorXd b(2);
  b << -1, 0;  // x <= -1 and x >= 0
  Eigen::VectorXd c(1);
  c << 1;
  auto r = lp::solve_max(A, b, c);
  CHECK(r.status == lp::Status::infeasible);
}

TEST_CASE("lp: negative right-hand sides go through phase one") {
  Eigen::MatrixXd A(2, 1);
  A << -1, 1;  // x >= 1, x <= 2
  Eigen::VectorXd b(2);
  b << -1, 2;
  Eigen::VectorXd c(1);
  c << -1;
  auto r = lp::solve_max(A, b, c);
  REQUIRE(r.status == lp::Status::optimal);
  CHECK(r.x[0] == doctest::Approx(1.0));
}

TEST_CASE("lp: fuzz against brute-force vertex enumeration") {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // random bounded 2D feasible region: box plus random cuts
    const int extra = 2 + static_cast<int>(3 * (unif(rng) + 1));
    Eigen::MatrixXd A(4 + extra, 2);
    Eigen::VectorXd b(4 + extra);
    A.topRows(4) << 1, 0, -1, 0, 0, 1, 0, -1;
    b.head(4) << 2, 2, 2, 2;
    for (int i = 0; i < extra; ++i) {
      Eigen::Vector2d n(unif(rng), unif(rng));
      if (n.norm() < 0.1) n = Eigen::Vector2d(1, 1);
      n.normalize();
      A.row(4 + i) = n;
      b[4 + i] = 0.3 + unif(rng);  // keeps the origin sometimes infeasible
    }
    Eigen::VectorXd c(2);
    c << unif(rng), unif(rng);
    auto r = lp::solve_max(A, b, c);

    // brute force: max of c.x over all feasible pairwise intersections
    double best = -1e300;
    const int m = static_cast<int>(A.rows());
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        const double det = A(i, 0) * A(j, 1) - A(i, 1) * A(j, 0);
        if (std::abs(det) < 1e-12) continue;
        const double x = (b[i] * A(j, 1) - b[j] * A(i, 1)) / det;
        const double y = (A(i, 0) * b[j] - A(j, 0) * b[i]) / det;
        bool feasible = true;
        for (int k = 0; k < m && feasible; ++k)
          if (A(k, 0) * x + A(k, 1) * y > b[k] + 1e-9) feasible = false;
        if (feasible) best = std::max(best, c[0] * x + c[1] * y);
      }
    }
    if (best < -1e299) {
      CHECK(r.status == lp::Status::infeasible);
    } else {
      REQUIRE(r.status == lp::Status::optimal);
      CHECK(r.value == doctest::Approx(best).epsilon(1e-8));
      ++solved;
    }
  }
  CHECK(solved > 100);
}

TEST_CASE("lp: degenerate and redundant rows") {
  Eigen::MatrixXd A(5, 2);
  A << 1, 0, 1, 0, 0, 1, -1, 0, 0, -1;
  Eigen::VectorXd b(5);
  b << 1, 1, 1, 0, 0;
  Eigen::VectorXd c(2);
  c << 2, 3;
  auto r = lp::solve_max(A, b, c);
  REQUIRE(r.status == lp::Status::optimal);
  CHECK(r.value == doctest::Approx(5.0));
}
