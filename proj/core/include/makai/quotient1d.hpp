#pragma once

#include "makai/exponents.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace makai {

/// Positive weight on an interval (0, L).  `monotone_nonincreasing` is a tag
/// set by callers that guarantee w(t) >= w(t') for t < t'; the comparison
/// theorem mu_p(w) >= mu_p(1) is only claimed under that tag.
struct Weight1D {
  double length = 1.0;
  std::function<double(double)> value;
  bool monotone_nonincreasing = false;

  static Weight1D unit(double L);

  /// Non-increasing step weight: levels[k] on [breaks[k], breaks[k+1]) with
  /// breaks[0] = 0, breaks.back() = L implied.  Levels must be positive and
  /// non-increasing.
  static Weight1D step(double L, std::vector<double> interior_breaks,
                       std::vector<double> levels);
};

struct Descent1DOptions {
  int max_iterations = 50000;
  double relative_tol = 1e-10;
  int restarts = 5;
  std::uint64_t seed = 42;
};

struct Descent1DResult {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;             // total across restarts
  std::vector<double> minimizer;  // nodal values, including fixed endpoints
};

/// Discrete upper bound for pi_{p,q}: minimum of ||u'||_p / ||u||_q over
/// piecewise-linear u on the uniform n-cell grid of (0,1) vanishing at both
/// endpoints.  |u'| is exact per cell; ||u||_q uses 5-point Gauss per cell.
/// Normalized subgradient descent with backtracking and seeded restarts;
/// deterministic for a fixed seed.  Requires n >= 16.
Descent1DResult pi_pq_numeric(const ExponentPair& e, int n,
                              const Descent1DOptions& opts = {});

/// Discrete weighted Rayleigh quotient mu_p(w,(0,L)): minimum of
/// int |psi'|^p w / int |psi|^p w over piecewise-linear psi with psi(0) = 0
/// and free right endpoint.  The weight is sampled at cell midpoints and must
/// be strictly positive there.  Requires p > 1, n >= 4.
Descent1DResult mu_p_numeric(const Weight1D& w, double p, int n,
                             const Descent1DOptions& opts = {});

} // namespace makai
