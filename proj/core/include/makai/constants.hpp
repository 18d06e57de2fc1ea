#pragma once

#include "makai/exponents.hpp"

namespace makai {

/// Sharp one-dimensional Poincare constant pi_{p,q} on (0,1) with zero values
/// at both endpoints.  Closed form via the Beta function:
///   pi_{p,q} = (2/q) (1 + q/p')^{1/q} (1 + p'/q)^{-1/p} B(1/q, 1/p'),
/// with p' = p/(p-1).  Requires p > 1.
double pi_pq(const ExponentPair& e);

/// pi_p = pi_{p,p}; the classical value 2*pi*(p-1)^{1/p} / (p sin(pi/p)).
double pi_p(double p);

/// Sharp constant of the distance-moment lower bound on convex sets:
///   C_{p,q} = (pi_{p,q}/2)^p ((p-q)/(pq+p-q))^{(p-q)/q}   for q < p,
///   C_{p,p} = (pi_p/2)^p                                   (continuous limit).
double c_pq(const ExponentPair& e);

/// Moment exponent alpha = p*q/(p-q) appearing in the lower bound.  Guarded:
/// values above 1e6 (q -> p) are reported as infinite so callers can switch to
/// the q = p branch.
double moment_exponent(const ExponentPair& e);

} // namespace makai
