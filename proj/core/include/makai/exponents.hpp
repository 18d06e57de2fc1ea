#pragma once

#include <cmath>
#include <stdexcept>

namespace makai {

/// Validated (p, q) exponent pair for the generalized principal frequency
/// lambda_{p,q}.  Admissible regimes: 1 <= q < p < inf, or 1 < q = p < inf.
class ExponentPair {
public:
  ExponentPair(double p, double q) : p_(p), q_(q) {
    if (!(q >= 1.0) || !(p >= q) || !std::isfinite(p) || !std::isfinite(q))
      throw std::invalid_argument("ExponentPair: need 1 <= q <= p < inf");
    if (q == p && !(p > 1.0))
      throw std::invalid_argument("ExponentPair: q = p requires p > 1");
  }

  double p() const { return p_; }
  double q() const { return q_; }
  bool equal_exponents() const { return p_ == q_; }

  /// Hoelder conjugate p' = p/(p-1); requires p > 1.
  double p_conjugate() const {
    if (!(p_ > 1.0))
      throw std::domain_error("ExponentPair: p' undefined for p = 1");
    return p_ / (p_ - 1.0);
  }

private:
  double p_;
  double q_;
};

} // namespace makai
