#include "makai/special.hpp"

#include <cmath>
#include <stdexcept>

namespace makai {

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("beta: arguments must be strictly positive");
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta(double a, double b) { return std::exp(log_beta(a, b)); }

} // namespace makai
