#include <doctest.h>

#include "makai/constants.hpp"
#include "makai/quotient1d.hpp"

#include <cmath>
#include <random>

using namespace makai;

TEST_CASE("pi_pq_numeric: matches the closed form at (2,2) and (2,1)") {
  auto r22 = pi_pq_numeric(ExponentPair(2, 2), 1000);
  CHECK(std::abs(r22.value - M_PI) <= 1e-3);

  auto r21 = pi_pq_numeric(ExponentPair(2, 1), 1000);
  CHECK(std::abs(r21.value - 2.0 * std::sqrt(3.0)) <= 1e-2);
}

TEST_CASE("pi_pq_numeric: non-increasing under grid refinement") {
  ExponentPair e(4, 2);
  double prev = 1e300;
  for (int n : {125, 250, 500, 1000}) {
    const double v = pi_pq_numeric(e, n).value;
    CHECK(v <= prev + 1e-7);
    prev = v;
  }
}

TEST_CASE("pi_pq_numeric: upper bound of the closed form") {
  for (auto [p, q] : {std::pair{2.0, 1.0}, {3.0, 2.0}, {4.0, 4.0}, {1.5, 1.0}}) {
    ExponentPair e(p, q);
    const double numeric = pi_pq_numeric(e, 400).value;
    CHECK(numeric >= pi_pq(e) - 1e-6);
  }
}

TEST_CASE("pi_pq_numeric: grid precondition") {
  CHECK_THROWS_AS(pi_pq_numeric(ExponentPair(2, 1), 8), std::invalid_argument);
}

TEST_CASE("mu_p_numeric: unit weight equals L^{-p} (pi_p/2)^p") {
  auto r = mu_p_numeric(Weight1D::unit(1.0), 2.0, 1000);
  const double expected = std::pow(M_PI / 2.0, 2.0);
  CHECK(std::abs(r.value - expected) <= 1e-3 * expected);

  auto r2 = mu_p_numeric(Weight1D::unit(2.0), 2.0, 1000);
  CHECK(r2.value == doctest::Approx(r.value / 4.0).epsilon(2e-3));
}

TEST_CASE("mu_p_numeric: monotone non-increasing weight does not lower mu") {
  Weight1D w;
  w.length = 1.0;
  w.value = [](double t) { return 1.0 - 0.5 * t; };
  w.monotone_nonincreasing = true;
  const double mw = mu_p_numeric(w, 2.0, 500).value;
  const double m1 = mu_p_numeric(Weight1D::unit(1.0), 2.0, 500).value;
  CHECK(mw >= m1 * (1.0 - 1e-3));
}

TEST_CASE("mu_p_numeric: random non-increasing step weights, several p") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (double p : {1.5, 2.0, 3.0}) {
    const double m1 = mu_p_numeric(Weight1D::unit(1.0), p, 300).value;
    for (int trial = 0; trial < 8; ++trial) {
      const int pieces = 2 + static_cast<int>(unif(rng) * 4);
      std::vector<double> breaks, levels;
      for (int k = 1; k < pieces; ++k) breaks.push_back(unif(rng));
      std::sort(breaks.begin(), breaks.end());
      double level = 1.0 + unif(rng);
      for (int k = 0; k < pieces; ++k) {
        levels.push_back(level);
        level *= 0.3 + 0.65 * unif(rng);
      }
      auto w = Weight1D::step(1.0, breaks, levels);
      CHECK(mu_p_numeric(w, p, 300).value >= m1 * (1.0 - 1e-3));
    }
  }
}

TEST_CASE("mu_p_numeric: weight positivity enforced") {
  Weight1D w;
  w.length = 1.0;
  w.value = [](double t) { return 0.5 - t; };  // negative past t = 0.5
  CHECK_THROWS_AS(mu_p_numeric(w, 2.0, 100), std::domain_error);
}

TEST_CASE("one-endpoint problem carries the factor of two") {
  // mu_p(1,(0,1))^{1/p} is pi_p/2; the two-endpoint discrete minimum is pi_p
  for (double p : {1.5, 2.0, 3.0}) {
    const double mu = mu_p_numeric(Weight1D::unit(1.0), p, 500).value;
    const double half = std::pow(mu, 1.0 / p);
    CHECK(2.0 * half == doctest::Approx(pi_p(p)).epsilon(1e-2));
  }
}

TEST_CASE("solvers are deterministic under a fixed seed") {
  Descent1DOptions opts;
  auto a = pi_pq_numeric(ExponentPair(3, 2), 200, opts);
  auto b = pi_pq_numeric(ExponentPair(3, 2), 200, opts);
  CHECK(a.value == b.value);
  CHECK(a.iterations == b.iterations);
}
