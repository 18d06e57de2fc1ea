#include "makai/quotient1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace makai {

namespace {

// 5-point Gauss-Legendre on [0,1].
constexpr int kGaussN = 5;
constexpr double kGaussX[kGaussN] = {
    0.5 - 0.45308992296933200, 0.5 - 0.26923465505284155, 0.5,
    0.5 + 0.26923465505284155, 0.5 + 0.45308992296933200};
constexpr double kGaussW[kGaussN] = {
    0.5 * 0.23692688505618909, 0.5 * 0.47862867049936647,
    0.5 * 0.56888888888888889, 0.5 * 0.47862867049936647,
    0.5 * 0.23692688505618909};

// |x|^r with fast paths for the exponents the suites use.
inline double pow_abs(double x, double r) {
  const double a = std::abs(x);
  if (r == 2.0) return a * a;
  if (r == 1.0) return a;
  if (r == 3.0) return a * a * a;
  if (r == 4.0) return (a * a) * (a * a);
  if (r == 1.5) return a * std::sqrt(a);
  if (r == 0.5) return std::sqrt(a);
  return std::pow(a, r);
}

// phi_r(x) = |x|^{r-1} sgn(x), with phi_r(0) = 0 (subgradient convention).
inline double phi(double x, double r) {
  if (x == 0.0) return 0.0;
  const double m = pow_abs(x, r - 1.0);
  return x > 0.0 ? m : -m;
}

using EvalFn =
    std::function<double(const std::vector<double>&, std::vector<double>*)>;

// Symmetric tridiagonal system solved by the Thomas algorithm.  Used as a
// stiffness preconditioner: raw nodal subgradients are O(1/h^2)
// ill-conditioned, and unpreconditioned steps would need ~n^2 iterations.
struct Tridiag {
  std::vector<double> lower, diag, upper;

  void solve(const std::vector<double>& b, std::vector<double>& x) const {
    const size_t n = diag.size();
    static thread_local std::vector<double> cp, dp;
    cp.assign(n, 0.0);
    dp.assign(n, 0.0);
    cp[0] = upper[0] / diag[0];
    dp[0] = b[0] / diag[0];
    for (size_t i = 1; i < n; ++i) {
      const double m = diag[i] - lower[i] * cp[i - 1];
      cp[i] = upper[i] / m;
      dp[i] = (b[i] - lower[i] * dp[i - 1]) / m;
    }
    x.assign(n, 0.0);
    x[n - 1] = dp[n - 1];
    for (size_t i = n - 1; i-- > 0;) x[i] = dp[i] - cp[i] * x[i + 1];
  }
};

Descent1DResult descend(const EvalFn& eval, const Tridiag& precond,
                        const std::vector<std::vector<double>>& inits,
                        const Descent1DOptions& opts) {
  Descent1DResult best;
  best.value = std::numeric_limits<double>::infinity();
  int total_iters = 0;

  for (const auto& init : inits) {
    std::vector<double> u = init;
    std::vector<double> grad(u.size(), 0.0), dir(u.size(), 0.0),
        trial(u.size(), 0.0);
    double value = eval(u, nullptr);
    double step = 0.25;
    bool converged = false;
    int patience = 0;

    for (int it = 0; it < opts.max_iterations; ++it) {
      ++total_iters;
      eval(u, &grad);
      precond.solve(grad, dir);
      double dnorm = 0.0;
      for (double g : dir) dnorm += g * g;
      dnorm = std::sqrt(dnorm);
      if (dnorm < 1e-300) {
        converged = true;
        break;
      }

      // normalized subgradient step, backtracking on non-decrease
      double trial_value = value;
      bool accepted = false;
      while (step > 1e-15) {
        for (size_t j = 0; j < u.size(); ++j)
          trial[j] = u[j] - step / dnorm * dir[j];
        trial_value = eval(trial, nullptr);
        if (trial_value < value) {
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) {
        converged = true;
        break;
      }

      const double rel_drop = (value - trial_value) / std::max(value, 1e-300);
      u.swap(trial);
      value = trial_value;
      // rescale so nodal values stay O(1); the quotient is 0-homogeneous
      double umax = 0.0;
      for (double v : u) umax = std::max(umax, std::abs(v));
      if (umax > 0.0)
        for (double& v : u) v /= umax;
      step = std::min(step * 1.5, 1.0);

      if (rel_drop < opts.relative_tol) {
        if (++patience >= 8) {
          converged = true;
          break;
        }
      } else {
        patience = 0;
      }
    }

    if (value < best.value) {
      best.value = value;
      best.minimizer = u;
      best.converged = converged;
    }
  }
  best.iterations = total_iters;
  return best;
}

std::vector<std::vector<double>> make_inits(int nodes, bool fix_right,
                                            int restarts, std::uint64_t seed) {
  std::vector<std::vector<double>> inits;
  // deterministic positive bump first: minimizers are positive in the interior
  std::vector<double> bump(nodes, 0.0);
  for (int j = 0; j < nodes; ++j) {
    const double x = static_cast<double>(j) / (nodes - 1);
    bump[j] = fix_right ? std::sin(M_PI * x) : std::sin(0.5 * M_PI * x);
  }
  bump.front() = 0.0;
  if (fix_right) bump.back() = 0.0;
  inits.push_back(bump);

  for (int r = 1; r <= restarts; ++r) {
    std::mt19937_64 rng(seed + 1000 * static_cast<std::uint64_t>(r));
    std::uniform_real_distribution<double> dist(0.05, 1.0);
    std::vector<double> v(nodes);
    for (int j = 0; j < nodes; ++j) v[j] = dist(rng);
    v.front() = 0.0;
    if (fix_right) v.back() = 0.0;
    inits.push_back(std::move(v));
  }
  return inits;
}

} // namespace

Weight1D Weight1D::unit(double L) {
  Weight1D w;
  w.length = L;
  w.value = [](double) { return 1.0; };
  w.monotone_nonincreasing = true;
  return w;
}

Weight1D Weight1D::step(double L, std::vector<double> interior_breaks,
                        std::vector<double> levels) {
  if (levels.empty() || interior_breaks.size() + 1 != levels.size())
    throw std::invalid_argument("Weight1D::step: breaks/levels mismatch");
  for (size_t k = 0; k + 1 < levels.size(); ++k)
    if (levels[k + 1] > levels[k])
      throw std::invalid_argument("Weight1D::step: levels must not increase");
  for (double lv : levels)
    if (!(lv > 0.0))
      throw std::invalid_argument("Weight1D::step: levels must be positive");
  Weight1D w;
  w.length = L;
  w.monotone_nonincreasing = true;
  w.value = [breaks = std::move(interior_breaks),
             lv = std::move(levels)](double t) {
    size_t k = 0;
    while (k < breaks.size() && t >= breaks[k]) ++k;
    return lv[k];
  };
  return w;
}

Descent1DResult pi_pq_numeric(const ExponentPair& e, int n,
                              const Descent1DOptions& opts) {
  if (n < 16) throw std::invalid_argument("pi_pq_numeric: n >= 16 required");
  const double p = e.p(), q = e.q();
  const double h = 1.0 / n;
  const int nodes = n + 1;

  // R(u) = (sum_i h|s_i|^p)^{1/p} / (sum_i h Gauss(|u|^q))^{1/q}
  EvalFn eval = [=](const std::vector<double>& u,
                    std::vector<double>* grad) -> double {
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
      const double s = (u[i + 1] - u[i]) / h;
      num += h * pow_abs(s, p);
      double cell = 0.0;
      for (int k = 0; k < kGaussN; ++k) {
        const double uv = u[i] * (1.0 - kGaussX[k]) + u[i + 1] * kGaussX[k];
        cell += kGaussW[k] * pow_abs(uv, q);
      }
      den += h * cell;
    }
    const double N = std::pow(num, 1.0 / p);
    const double D = std::pow(den, 1.0 / q);
    const double R = N / D;
    if (grad) {
      grad->assign(nodes, 0.0);
      const double nf = std::pow(num, 1.0 / p - 1.0);
      const double df = std::pow(den, 1.0 / q - 1.0);
      for (int i = 0; i < n; ++i) {
        const double s = (u[i + 1] - u[i]) / h;
        const double fs = phi(s, p);  // dN terms: nf * (phi(s_{i}) jumps)
        double dl = 0.0, dr = 0.0;
        for (int k = 0; k < kGaussN; ++k) {
          const double uv = u[i] * (1.0 - kGaussX[k]) + u[i + 1] * kGaussX[k];
          const double fq = kGaussW[k] * phi(uv, q);
          dl += fq * (1.0 - kGaussX[k]);
          dr += fq * kGaussX[k];
        }
        // dD/du terms: df * h * (shape-weighted phi_q)
        (*grad)[i] += (-nf * fs - R * df * h * dl) / D;
        (*grad)[i + 1] += (nf * fs - R * df * h * dr) / D;
      }
      (*grad)[0] = 0.0;
      (*grad)[n] = 0.0;
    }
    return R;
  };

  Tridiag pre;
  pre.lower.assign(nodes, 0.0);
  pre.diag.assign(nodes, 1.0);
  pre.upper.assign(nodes, 0.0);
  for (int j = 1; j < n; ++j) {
    pre.lower[j] = -1.0 / h;
    pre.diag[j] = 2.0 / h;
    pre.upper[j] = -1.0 / h;
  }

  auto inits = make_inits(nodes, true, std::max(1, opts.restarts), opts.seed);
  return descend(eval, pre, inits, opts);
}

Descent1DResult mu_p_numeric(const Weight1D& w, double p, int n,
                             const Descent1DOptions& opts) {
  if (!(p > 1.0)) throw std::invalid_argument("mu_p_numeric: requires p > 1");
  if (n < 4) throw std::invalid_argument("mu_p_numeric: n >= 4 required");
  if (!(w.length > 0.0) || !w.value)
    throw std::invalid_argument("mu_p_numeric: invalid weight");
  const double L = w.length;
  const double h = L / n;
  const int nodes = n + 1;

  std::vector<double> wm(n);
  for (int i = 0; i < n; ++i) {
    wm[i] = w.value((i + 0.5) * h);
    if (!(wm[i] > 0.0))
      throw std::domain_error("mu_p_numeric: weight non-positive at sample");
  }

  EvalFn eval = [=](const std::vector<double>& u,
                    std::vector<double>* grad) -> double {
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
      const double s = (u[i + 1] - u[i]) / h;
      num += wm[i] * h * pow_abs(s, p);
      double cell = 0.0;
      for (int k = 0; k < kGaussN; ++k) {
        const double uv = u[i] * (1.0 - kGaussX[k]) + u[i + 1] * kGaussX[k];
        cell += kGaussW[k] * pow_abs(uv, p);
      }
      den += wm[i] * h * cell;
    }
    const double Q = num / den;
    if (grad) {
      grad->assign(nodes, 0.0);
      for (int i = 0; i < n; ++i) {
        const double s = (u[i + 1] - u[i]) / h;
        const double fs = p * wm[i] * phi(s, p);
        double dl = 0.0, dr = 0.0;
        for (int k = 0; k < kGaussN; ++k) {
          const double uv = u[i] * (1.0 - kGaussX[k]) + u[i + 1] * kGaussX[k];
          const double fq = kGaussW[k] * p * phi(uv, p);
          dl += fq * (1.0 - kGaussX[k]);
          dr += fq * kGaussX[k];
        }
        (*grad)[i] += (-fs - Q * wm[i] * h * dl) / den;
        (*grad)[i + 1] += (fs - Q * wm[i] * h * dr) / den;
      }
      (*grad)[0] = 0.0;  // psi(0) = 0
    }
    return Q;
  };

  Tridiag pre;
  pre.lower.assign(nodes, 0.0);
  pre.diag.assign(nodes, 1.0);
  pre.upper.assign(nodes, 0.0);
  for (int j = 1; j < n; ++j) {
    pre.lower[j] = -wm[j - 1] / h;
    pre.diag[j] = (wm[j - 1] + wm[j]) / h;
    pre.upper[j] = -wm[j] / h;
  }
  pre.lower[n] = -wm[n - 1] / h;
  pre.diag[n] = wm[n - 1] / h;

  auto inits = make_inits(nodes, false, std::max(1, opts.restarts), opts.seed);
  return descend(eval, pre, inits, opts);
}

} // namespace makai
