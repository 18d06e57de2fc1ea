#include "makai/measure.hpp"

#include "makai/constants.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace makai {

namespace {

struct KahanSum {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// complete homogeneous symmetric polynomial h_deg(x_0..x_m)
double complete_homogeneous(std::span<const double> x, int deg) {
  std::vector<double> h(deg + 1, 0.0);
  h[0] = 1.0;
  for (double xi : x)
    for (int d = 1; d <= deg; ++d) h[d] += xi * h[d - 1];
  return h[deg];
}

double integer_kernel(int N, double vol, std::span<const double> v, int alpha) {
  // vol * h_alpha(v) * prod_{k=1..N} k/(alpha+k)
  double f = 1.0;
  for (int k = 1; k <= N; ++k) f *= static_cast<double>(k) / (alpha + k);
  return vol * f * complete_homogeneous(v, alpha);
}

double divided_difference_kernel(int N, double vol, std::span<const double> v,
                                 double alpha) {
  const double beta = alpha + N;
  double C = 1.0;
  for (int k = 1; k <= N; ++k) C /= (alpha + k);
  auto g_deriv = [&](double t, int m) {
    // d^m/dt^m of C t^beta, divided by m!
    double coef = C;
    for (int j = 0; j < m; ++j) coef *= (beta - j);
    double fact = 1.0;
    for (int j = 2; j <= m; ++j) fact *= j;
    return coef / fact * std::pow(t, beta - m);
  };

  std::vector<double> z(v.begin(), v.end());
  std::sort(z.begin(), z.end());
  // merge clusters within 1e-7 of the value scale (raw divided differences
  // are ill-conditioned near coincidence)
  const double vscale = std::max(1e-300, z.back());
  const double ctol = 1e-7 * vscale;
  for (size_t i = 0; i + 1 < z.size();) {
    size_t j = i + 1;
    while (j < z.size() && z[j] - z[i] <= ctol) ++j;
    if (j - i > 1) {
      double mean = 0.0;
      for (size_t k = i; k < j; ++k) mean += z[k];
      mean /= static_cast<double>(j - i);
      for (size_t k = i; k < j; ++k) z[k] = mean;
    }
    i = j;
  }

  // Hermite divided-difference table with confluent nodes
  const int n = static_cast<int>(z.size());
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = g_deriv(z[i], 0);
  std::vector<double> cur = d;
  for (int order = 1; order < n; ++order) {
    std::vector<double> nxt(n - order);
    for (int i = 0; i + order < n; ++i) {
      if (z[i + order] == z[i]) {
        nxt[i] = g_deriv(z[i], order);
      } else {
        nxt[i] = (cur[i + 1] - cur[i]) / (z[i + order] - z[i]);
      }
    }
    cur.swap(nxt);
  }
  double nfact = 1.0;
  for (int k = 2; k <= N; ++k) nfact *= k;
  return nfact * vol * cur[0];
}

} // namespace

namespace detail {

double symmetric_polynomial_route(const Simplex& T,
                                  std::span<const double> values, int alpha) {
  std::vector<double> v(values.begin(), values.end());
  return integer_kernel(T.dim, T.volume(), v, alpha);
}

double divided_difference_route(const Simplex& T,
                                std::span<const double> values, double alpha) {
  std::vector<double> v(values.begin(), values.end());
  return divided_difference_kernel(T.dim, T.volume(), v, alpha);
}

} // namespace detail

double simplex_linear_power(const Simplex& T, std::span<const double> values,
                            double alpha) {
  const int N = T.dim;
  if (static_cast<int>(values.size()) != N + 1)
    throw std::invalid_argument("simplex_linear_power: need dim+1 values");
  if (alpha < 0.0)
    throw std::domain_error("simplex_linear_power: alpha must be >= 0");
  std::vector<double> v(values.begin(), values.end());
  double vmax = 0.0;
  for (double x : v) vmax = std::max(vmax, std::abs(x));
  for (double& x : v) {
    if (x < 0.0) {
      if (x < -1e-12 * std::max(1.0, vmax))
        throw std::domain_error("simplex_linear_power: negative vertex value");
      x = 0.0;
    }
  }
  const double vol = T.volume();
  if (vol == 0.0) return 0.0;
  if (alpha == 0.0) return vol;

  const double rounded = std::round(alpha);
  if (std::abs(alpha - rounded) < 1e-12 && rounded <= 64.0)
    return integer_kernel(N, vol, v, static_cast<int>(rounded));
  return divided_difference_kernel(N, vol, v, alpha);
}

MomentResult distance_moment(const Polytope& P, double alpha) {
  if (alpha < 0.0)
    throw std::domain_error("distance_moment: alpha must be >= 0");
  KahanSum acc;
  for (const auto& cell : facet_partition(P)) {
    for (const auto& s : cell.cell.triangulate()) {
      std::vector<double> vals(cell.cell.dimension() + 1);
      for (int k = 0; k <= cell.cell.dimension(); ++k)
        vals[k] =
            std::max(0.0, cell.base.offset - cell.base.normal.dot(s.v[k]));
      acc.add(simplex_linear_power(s, vals, alpha));
    }
  }
  return MomentResult{alpha, acc.sum, MomentMethod::exact, 0.0};
}

MomentResult distance_moment_mc(const Polytope& P, double alpha,
                                std::size_t samples, std::uint64_t seed) {
  if (samples == 0)
    throw std::invalid_argument("distance_moment_mc: need samples > 0");
  Vec3 lo = P.vertices().front(), hi = lo;
  for (const auto& v : P.vertices()) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  const int dim = P.dimension();
  double box_vol = 1.0;
  for (int k = 0; k < dim; ++k) box_vol *= (hi[k] - lo[k]);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  KahanSum sum, sum_sq;
  for (std::size_t i = 0; i < samples; ++i) {
    Vec3 x = Vec3::Zero();
    for (int k = 0; k < dim; ++k) x[k] = lo[k] + (hi[k] - lo[k]) * unif(rng);
    const double margin = P.signed_margin(x);
    const double f = margin > 0.0 ? std::pow(margin, alpha) : 0.0;
    sum.add(f);
    sum_sq.add(f * f);
  }
  const double n = static_cast<double>(samples);
  const double mean = sum.sum / n;
  const double var = std::max(0.0, sum_sq.sum / n - mean * mean);
  MomentResult res;
  res.alpha = alpha;
  res.value = box_vol * mean;
  res.method = MomentMethod::monte_carlo;
  res.error_estimate = box_vol * std::sqrt(var / n);
  return res;
}

double moment_upper_bound(const Polytope& P, double alpha) {
  if (!(alpha > 0.0))
    throw std::domain_error("moment_upper_bound: alpha must be > 0");
  const double r = P.inradius().r;
  return P.volume() * std::pow(r, alpha) / (alpha + 1.0);
}

double makai_lower_bound(const Polytope& P, const ExponentPair& e) {
  const double alpha = moment_exponent(e);
  if (!std::isfinite(alpha)) {
    const double r = P.inradius().r;
    return std::pow(pi_p(e.p()) / 2.0, e.p()) / std::pow(r, e.p());
  }
  const double moment = distance_moment(P, alpha).value;
  return c_pq(e) / std::pow(moment, (e.p() - e.q()) / e.q());
}

double hersch_protter_bound(const Polytope& P, const ExponentPair& e) {
  const double r = P.inradius().r;
  const double vol_factor =
      e.p() == e.q() ? 1.0 : std::pow(P.volume(), (e.p() - e.q()) / e.q());
  return std::pow(pi_pq(e) / 2.0, e.p()) / (vol_factor * std::pow(r, e.p()));
}

} // namespace makai
