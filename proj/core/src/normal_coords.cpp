#include "makai/normal_coords.hpp"

#include "makai/constants.hpp"
#include "makai/quotient1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace makai {

namespace {

constexpr int kDense = 4096;
constexpr double kTwoPi = 2.0 * M_PI;

double wrap(double s) {
  s = std::fmod(s, kTwoPi);
  return s < 0.0 ? s + kTwoPi : s;
}

// periodic cubic spline moments (second derivatives) for uniformly spaced
// samples; cyclic tridiagonal system solved by Sherman-Morrison on Thomas
std::vector<double> periodic_spline_moments(const std::vector<double>& y,
                                            double hstep) {
  const int n = static_cast<int>(y.size());
  std::vector<double> rhs(n);
  for (int i = 0; i < n; ++i) {
    const double ym = y[(i + n - 1) % n], yp = y[(i + 1) % n];
    rhs[i] = 6.0 * (ym - 2.0 * y[i] + yp) / (hstep * hstep);
  }
  // system: M_{i-1} + 4 M_i + M_{i+1} = rhs_i, cyclic; Sherman-Morrison with
  // u = (gamma,0,...,0,1), v = (1,0,...,0,1/gamma) strips the corner entries
  const double gamma = -4.0;
  std::vector<double> bu(n, 0.0);
  bu[0] = gamma;
  bu[n - 1] = 1.0;
  auto thomas_mod = [&](std::vector<double> b) {
    std::vector<double> c(n, 1.0), d(n, 4.0), e(n, 1.0), x(n);
    d[0] -= gamma;
    d[n - 1] -= 1.0 / gamma;
    for (int i = 1; i < n; ++i) {
      const double m = c[i] / d[i - 1];
      d[i] -= m * e[i - 1];
      b[i] -= m * b[i - 1];
    }
    x[n - 1] = b[n - 1] / d[n - 1];
    for (int i = n - 2; i >= 0; --i) x[i] = (b[i] - e[i] * x[i + 1]) / d[i];
    return x;
  };
  std::vector<double> xr = thomas_mod(rhs);
  std::vector<double> xu = thomas_mod(bu);
  const double num = xr[0] + xr[n - 1] / gamma;
  const double den = 1.0 + xu[0] + xu[n - 1] / gamma;
  std::vector<double> M(n);
  for (int i = 0; i < n; ++i) M[i] = xr[i] - num / den * xu[i];
  return M;
}

} // namespace

SmoothBody2D::SmoothBody2D(Curve gamma, Curve dgamma, Curve ddgamma)
    : gamma_(std::move(gamma)),
      dgamma_(std::move(dgamma)),
      ddgamma_(std::move(ddgamma)) {
  if (!gamma_ || !dgamma_ || !ddgamma_)
    throw std::invalid_argument("SmoothBody2D: missing curve evaluators");
  if ((gamma_(0.0) - gamma_(kTwoPi)).norm() > 1e-12)
    throw std::invalid_argument("SmoothBody2D: curve is not closed");

  dense_.reserve(kDense);
  dense_s_.reserve(kDense);
  Vec2 c = Vec2::Zero();
  for (int k = 0; k < kDense; ++k) {
    const double s = kTwoPi * k / kDense;
    dense_.push_back(gamma_(s));
    dense_s_.push_back(s);
    c += dense_.back();
  }
  centroid_ = c / kDense;
  for (const auto& p : dense_)
    diameter_ = std::max(diameter_, 2.0 * (p - centroid_).norm());

  // strict convexity at the dense samples
  for (int k = 0; k < 512; ++k) {
    const double s = kTwoPi * k / 512;
    if (!(curvature(s) > 0.0))
      throw std::invalid_argument("SmoothBody2D: curvature must be positive");
  }
  // inward normals point toward the centroid
  for (int k = 0; k < 16; ++k) {
    const double s = kTwoPi * k / 16;
    if ((centroid_ - gamma_(s)).dot(inward_normal(s)) <= 0.0)
      throw std::invalid_argument(
          "SmoothBody2D: curve must be counterclockwise");
  }
}

double SmoothBody2D::curvature(double s) const {
  const Vec2 d = dgamma_(s), dd = ddgamma_(s);
  const double speed = d.norm();
  if (speed < 1e-12)
    throw std::domain_error("SmoothBody2D: degenerate parametrization");
  return (d.x() * dd.y() - d.y() * dd.x()) / (speed * speed * speed);
}

Vec2 SmoothBody2D::inward_normal(double s) const {
  const Vec2 t = dgamma_(s).normalized();
  return Vec2(-t.y(), t.x());  // left of travel: interior of a CCW curve
}

double SmoothBody2D::boundary_distance(const Vec2& x) const {
  int best = 0;
  double bd = 1e300;
  for (int k = 0; k < kDense; ++k) {
    const double d2 = (dense_[k] - x).squaredNorm();
    if (d2 < bd) {
      bd = d2;
      best = k;
    }
  }
  double s = dense_s_[best];
  for (int it = 0; it < 3; ++it) {
    const Vec2 g = gamma_(s), dg = dgamma_(s), ddg = ddgamma_(s);
    const double f = (g - x).dot(dg);
    const double fp = dg.squaredNorm() + (g - x).dot(ddg);
    if (fp <= 0.0) break;
    s = wrap(s - f / fp);
  }
  return std::min((gamma_(s) - x).norm(), std::sqrt(bd));
}

bool SmoothBody2D::inside(const Vec2& x) const {
  int best = 0;
  double bd = 1e300;
  for (int k = 0; k < kDense; ++k) {
    const double d2 = (dense_[k] - x).squaredNorm();
    if (d2 < bd) {
      bd = d2;
      best = k;
    }
  }
  return (x - dense_[best]).dot(inward_normal(dense_s_[best])) >= 0.0;
}

double SmoothBody2D::cut_distance(double s, double tol) const {
  if (!(tol > 0.0)) throw std::invalid_argument("cut_distance: tol > 0");
  const Vec2 base = gamma_(s);
  const Vec2 nu = inward_normal(s);
  const double pred_tol = std::max(1e-10, 1e-3 * tol);
  auto nearest_is_base = [&](double t) {
    const double d = boundary_distance(base + t * nu);
    return t - d <= pred_tol;
  };
  double lo = 0.0, hi = diameter_;
  if (nearest_is_base(hi)) return hi;
  // the predicate holds on [0, l) and fails after; bisect the switch
  int guard = 0;
  while (hi - lo > tol && guard++ < 200) {
    const double mid = 0.5 * (lo + hi);
    if (nearest_is_base(mid))
      lo = mid;
    else
      hi = mid;
  }
  if (lo == 0.0) return 0.0;  // tolerance too tight to certify any depth
  return 0.5 * (lo + hi);
}

double SmoothBody2D::inradius_estimate() const {
  Vec2 x = centroid_;
  double best = boundary_distance(x);
  double step = 0.25 * diameter_;
  while (step > 1e-10) {
    bool improved = false;
    for (const Vec2& d : {Vec2(1, 0), Vec2(-1, 0), Vec2(0, 1), Vec2(0, -1)}) {
      const Vec2 y = x + step * d;
      if (!inside(y)) continue;
      const double v = boundary_distance(y);
      if (v > best) {
        best = v;
        x = y;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

std::vector<Vec2> SmoothBody2D::inscribed_polygon(int m) const {
  if (m < 3) throw std::invalid_argument("inscribed_polygon: m >= 3");
  std::vector<Vec2> poly;
  poly.reserve(m);
  for (int k = 0; k < m; ++k) poly.push_back(gamma_(kTwoPi * k / m));
  return poly;
}

SmoothBody2D SmoothBody2D::circle(double R) {
  if (!(R > 0.0)) throw std::invalid_argument("circle: R > 0");
  return SmoothBody2D(
      [R](double s) { return Vec2(R * std::cos(s), R * std::sin(s)); },
      [R](double s) { return Vec2(-R * std::sin(s), R * std::cos(s)); },
      [R](double s) { return Vec2(-R * std::cos(s), -R * std::sin(s)); });
}

SmoothBody2D SmoothBody2D::ellipse(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("ellipse: a,b > 0");
  return SmoothBody2D(
      [a, b](double s) { return Vec2(a * std::cos(s), b * std::sin(s)); },
      [a, b](double s) { return Vec2(-a * std::sin(s), b * std::cos(s)); },
      [a, b](double s) { return Vec2(-a * std::cos(s), -b * std::sin(s)); });
}

SmoothBody2D SmoothBody2D::from_samples(const std::vector<Vec2>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 8) throw std::invalid_argument("from_samples: need >= 8 points");
  const double hstep = kTwoPi / n;
  std::vector<double> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = points[i].x();
    ys[i] = points[i].y();
  }
  auto Mx = periodic_spline_moments(xs, hstep);
  auto My = periodic_spline_moments(ys, hstep);

  auto eval = [n, hstep](const std::vector<double>& y,
                         const std::vector<double>& M, double s,
                         int deriv) -> double {
    s = wrap(s);
    int i = static_cast<int>(std::floor(s / hstep));
    if (i >= n) i = n - 1;
    const int j = (i + 1) % n;
    const double t = s - i * hstep;
    const double u = hstep - t;
    switch (deriv) {
      case 0:
        return (M[i] * u * u * u + M[j] * t * t * t) / (6.0 * hstep) +
               (y[i] / hstep - M[i] * hstep / 6.0) * u +
               (y[j] / hstep - M[j] * hstep / 6.0) * t;
      case 1:
        return (-M[i] * u * u + M[j] * t * t) / (2.0 * hstep) -
               (y[i] / hstep - M[i] * hstep / 6.0) +
               (y[j] / hstep - M[j] * hstep / 6.0);
      default:
        return (M[i] * u + M[j] * t) / hstep;
    }
  };
  auto curve = [xs, ys, Mx, My, eval](int deriv) {
    return [xs, ys, Mx, My, eval, deriv](double s) {
      return Vec2(eval(xs, Mx, s, deriv), eval(ys, My, s, deriv));
    };
  };
  return SmoothBody2D(curve(0), curve(1), curve(2));
}

NormalChart normal_chart(const SmoothBody2D& body, double s, double tol) {
  NormalChart chart;
  chart.s = s;
  chart.cut = body.cut_distance(s, tol);
  chart.kappa = body.curvature(s);
  return chart;
}

double cov_integral(const SmoothBody2D& body,
                    const std::function<double(const Vec2&)>& h, int n_s,
                    int n_t) {
  if (n_s < 4 || n_t < 2)
    throw std::invalid_argument("cov_integral: grid too coarse");
  const double ds = kTwoPi / n_s;
  double total = 0.0;
  for (int i = 0; i < n_s; ++i) {
    const double s = (i + 0.5) * ds;
    const double l = body.cut_distance(s, 1e-8);
    const double kappa = body.curvature(s);
    const double speed = body.derivative(s).norm();
    const Vec2 base = body.point(s);
    const Vec2 nu = body.inward_normal(s);
    const double dt = l / n_t;
    double inner = 0.0;
    for (int j = 0; j < n_t; ++j) {
      const double t = (j + 0.5) * dt;
      inner += h(base + t * nu) * (1.0 - t * kappa);
    }
    total += speed * ds * inner * dt;
  }
  return total;
}

InequalityReport weighted_quotient_check(const SmoothBody2D& body, double s,
                                         double p, int n) {
  const auto chart = normal_chart(body, s);
  Weight1D w;
  w.length = chart.cut;
  w.monotone_nonincreasing = true;
  w.value = [chart](double t) { return chart.weight(t); };
  const double mu_w = mu_p_numeric(w, p, n).value;
  const double mu_1 = mu_p_numeric(Weight1D::unit(chart.cut), p, n).value;
  return make_report("weighted_quotient", mu_1 * (1.0 - 1e-3), mu_w, 0.0, "le",
                     "mu_p(1,(0,l)) minus discretization slack",
                     "mu_p(1 - t kappa, (0,l))");
}

InequalityReport hp_smooth_check(const SmoothBody2D& body, double p, int m,
                                 double h, const LambdaOptions& opts) {
  const double r = body.inradius_estimate();
  const double left = std::pow(pi_p(p) / (2.0 * r), p);
  TriangleMesh mesh = mesh_polygon(body.inscribed_polygon(m), h);
  const auto lam = minimize_lambda(mesh, ExponentPair(p, p), opts);
  return make_report("hersch_protter_smooth", left, lam.lambda_upper, 1e-9,
                     "le", "(pi_p/2)^p / r^p",
                     "FEM upper bound on an inscribed polygon");
}

} // namespace makai
