#pragma once

namespace makai {

/// Euler Beta function B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), evaluated via
/// log-Gamma so large arguments do not overflow.  Arguments must be > 0.
double beta(double a, double b);

/// log B(a,b), same domain.
double log_beta(double a, double b);

} // namespace makai
