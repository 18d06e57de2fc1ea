#pragma once

#include "makai/exponents.hpp"
#include "makai/geometry.hpp"

#include <cstdint>
#include <span>

namespace makai {

enum class MomentMethod { exact, quadrature, monte_carlo };

struct MomentResult {
  double alpha = 0.0;
  double value = 0.0;
  MomentMethod method = MomentMethod::exact;
  double error_estimate = 0.0;  // 0 for exact; standard error for Monte Carlo
};

/// Exact integral over the simplex of ell^alpha, where ell is the affine
/// function taking value values[k] >= 0 at vertex k.  Integer alpha uses the
/// complete homogeneous symmetric polynomial closed form; real alpha uses the
/// order-N divided difference of g(t) = t^{alpha+N} / prod_{k=1..N}(alpha+k),
/// with confluent handling of clustered vertex values.
double simplex_linear_power(const Simplex& T, std::span<const double> values,
                            double alpha);

namespace detail {
/// The two kernel routes individually (integer alpha only for the first);
/// simplex_linear_power dispatches between them.
double symmetric_polynomial_route(const Simplex& T,
                                  std::span<const double> values, int alpha);
double divided_difference_route(const Simplex& T,
                                std::span<const double> values, double alpha);
} // namespace detail

/// Exact distance-function moment int_P d^alpha dx via the nearest-facet
/// partition: on each cell the distance is the affine gap to the base facet.
MomentResult distance_moment(const Polytope& P, double alpha);

/// Monte Carlo estimate of the same moment by rejection sampling from the
/// bounding box; error_estimate is one standard error.
MomentResult distance_moment_mc(const Polytope& P, double alpha,
                                std::size_t samples, std::uint64_t seed);

/// |P| r^alpha / (alpha + 1); dominates distance_moment for every alpha > 0.
double moment_upper_bound(const Polytope& P, double alpha);

/// Sharp lower bound for lambda_{p,q}(P) in terms of the distance moment:
/// C_{p,q} / (int d^{pq/(p-q)})^{(p-q)/q} for q < p, and (pi_p/2)^p / r^p
/// for q = p (or when the moment exponent overflows).
double makai_lower_bound(const Polytope& P, const ExponentPair& e);

/// (pi_{p,q}/2)^p / (|P|^{(p-q)/q} r^p).
double hersch_protter_bound(const Polytope& P, const ExponentPair& e);

} // namespace makai
