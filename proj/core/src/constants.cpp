#include "makai/constants.hpp"

#include "makai/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace makai {

double pi_pq(const ExponentPair& e) {
  const double p = e.p(), q = e.q();
  if (!(p > 1.0))
    throw std::domain_error("pi_pq: requires p > 1 (p' infinite at p = 1)");
  const double pc = e.p_conjugate();
  return (2.0 / q) * std::pow(1.0 + q / pc, 1.0 / q) *
         std::pow(1.0 + pc / q, -1.0 / p) * beta(1.0 / q, 1.0 / pc);
}

double pi_p(double p) { return pi_pq(ExponentPair(p, p)); }

double moment_exponent(const ExponentPair& e) {
  const double p = e.p(), q = e.q();
  if (p == q) return std::numeric_limits<double>::infinity();
  const double alpha = p * q / (p - q);
  if (alpha > 1e6) return std::numeric_limits<double>::infinity();
  return alpha;
}

double c_pq(const ExponentPair& e) {
  const double p = e.p(), q = e.q();
  const double base = std::pow(pi_pq(e) / 2.0, p);
  if (p == q) return base;
  // ((p-q)/(pq+p-q))^{(p-q)/q} -> 1 as q -> p, so the q = p branch above is
  // the continuous extension.
  const double ratio = (p - q) / (p * q + p - q);
  return base * std::pow(ratio, (p - q) / q);
}

} // namespace makai
