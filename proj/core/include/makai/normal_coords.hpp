#pragma once

#include "makai/mesh.hpp"
#include "makai/spectral.hpp"

#include <functional>
#include <vector>

namespace makai {

/// Strictly convex planar C^2 body given by a counterclockwise parametric
/// boundary curve on [0, 2pi).  Constructors validate convexity (kappa > 0),
/// closure, and inward-normal orientation.
class SmoothBody2D {
public:
  using Curve = std::function<Vec2(double)>;

  SmoothBody2D(Curve gamma, Curve dgamma, Curve ddgamma);

  static SmoothBody2D circle(double R);
  static SmoothBody2D ellipse(double a, double b);

  /// Closed curve through tabulated points via a periodic cubic spline
  /// (points in counterclockwise order, uniformly spaced in parameter).
  static SmoothBody2D from_samples(const std::vector<Vec2>& points);

  Vec2 point(double s) const { return gamma_(s); }
  Vec2 derivative(double s) const { return dgamma_(s); }
  Vec2 second_derivative(double s) const { return ddgamma_(s); }

  /// Signed curvature (positive by strict convexity).
  double curvature(double s) const;

  /// Unit normal pointing into the body.
  Vec2 inward_normal(double s) const;

  Vec2 centroid() const { return centroid_; }
  double diameter() const { return diameter_; }

  /// Distance from an interior (or exterior) point to the boundary curve:
  /// nearest dense-polyline sample refined by two Newton steps on the
  /// squared-distance stationarity equation.
  double boundary_distance(const Vec2& x) const;
  bool inside(const Vec2& x) const;

  /// Cut distance l(s): largest t with d(gamma(s) + t nu(s)) = t, found by
  /// bisection on [0, diameter].  Result within tol.  Returns 0 when the
  /// predicate cannot be certified at this tolerance (tolerance too tight,
  /// since l > 0 for a strictly convex body).
  double cut_distance(double s, double tol = 1e-8) const;

  /// max of the distance function (pattern search from the centroid).
  double inradius_estimate() const;

  /// Inscribed polygon through m boundary points (a convex polygon inside
  /// the body, so its principal frequency dominates the body's).
  std::vector<Vec2> inscribed_polygon(int m) const;

private:
  Curve gamma_, dgamma_, ddgamma_;
  std::vector<Vec2> dense_;
  std::vector<double> dense_s_;
  Vec2 centroid_ = Vec2::Zero();
  double diameter_ = 0.0;
};

/// Normal-coordinates chart at boundary parameter s: cut distance and the
/// Jacobian weight w(t) = 1 - t kappa(s) on (0, l(s)), positive and
/// non-increasing.
struct NormalChart {
  double s = 0.0;
  double cut = 0.0;
  double kappa = 0.0;
  double weight(double t) const { return 1.0 - t * kappa; }
};

NormalChart normal_chart(const SmoothBody2D& body, double s, double tol = 1e-8);

/// Composite midpoint quadrature of
///   int_{boundary} int_0^{l(s)} h(gamma(s) + t nu(s)) (1 - t kappa(s)) dt ds
/// which converges to int_body h.
double cov_integral(const SmoothBody2D& body,
                    const std::function<double(const Vec2&)>& h, int n_s,
                    int n_t);

/// mu_p comparison for the chart weight at s: passes iff
/// mu_p(w_s) >= mu_p(1) (1 - 1e-3) on (0, l(s)).
InequalityReport weighted_quotient_check(const SmoothBody2D& body, double s,
                                         double p, int n);

/// (pi_p/2)^p / r^p <= lambda_p upper bound computed on an inscribed
/// m-gon meshed at h.
InequalityReport hp_smooth_check(const SmoothBody2D& body, double p, int m,
                                 double h, const LambdaOptions& opts = {});

} // namespace makai
