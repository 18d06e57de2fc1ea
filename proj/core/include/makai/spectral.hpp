#pragma once

#include "makai/exponents.hpp"
#include "makai/geometry.hpp"
#include "makai/mesh.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace makai {

/// Nodal values aligned with mesh nodes; zero on fixed nodes.
struct DiscreteField {
  std::vector<double> values;
};

/// One audited inequality instance.  Directions: "le" passes iff
/// left <= right * (1 + tolerance), "lt" iff left < right strictly.
struct InequalityReport {
  std::string id;
  double left = 0.0;
  double right = 0.0;
  double ratio = 0.0;
  double tolerance = 0.0;
  std::string direction = "le";
  bool pass = false;
  std::string left_provenance;
  std::string right_provenance;
};

InequalityReport make_report(std::string id, double left, double right,
                             double tolerance, std::string direction,
                             std::string left_prov, std::string right_prov);

/// Rayleigh quotient int |grad u|^p / (int |u|^q)^{p/q}.  The gradient term
/// is exact (piecewise constant); |u|^q is integrated exactly by splitting
/// every triangle along the zero level set of u and applying the simplex
/// power kernel.  The value is a true upper bound for lambda_{p,q} of the
/// meshed domain since u extends by zero to an admissible test function.
double rayleigh_pq(const TriangleMesh& mesh, const DiscreteField& u,
                   const ExponentPair& e);

namespace detail {
/// Exact int_T |u|^q for the linear function with the given vertex values,
/// by zero-level-set splitting plus the simplex power kernel.
double abs_power_over_triangle(const Vec2& p0, const Vec2& p1, const Vec2& p2,
                               const double values[3], double q);
} // namespace detail

struct LambdaOptions {
  double tol = 1e-10;
  int max_power_iterations = 20000;
  int max_descent_iterations = 5000;
  std::uint64_t seed = 42;
};

struct LambdaResult {
  double lambda_upper = 0.0;
  DiscreteField field;
  bool converged = false;
  int iterations = 0;
  std::vector<double> descent_history;  // general-exponent path only
};

/// Certified-from-above minimization of the (p,q) Rayleigh quotient over the
/// mesh's P1 space.  (2,2): inverse power iteration on stiffness/mass.
/// (2,1): one stiffness solve against the load vector (torsion route).
/// Other (p,q): preconditioned normalized subgradient descent from the (2,2)
/// minimizer with backtracking; the quotient never increases.
LambdaResult minimize_lambda(const TriangleMesh& mesh, const ExponentPair& e,
                             const LambdaOptions& opts = {});

/// Boundary polygon of a planar polytope (counterclockwise vertices).
std::vector<Vec2> polygon_of(const Polytope& P);

/// Audits the distance-moment lower bound against the FEM upper bound on a
/// meshed polytope: pass iff lower <= upper.
InequalityReport verify_makai(const Polytope& P, const ExponentPair& e,
                              double h, const LambdaOptions& opts = {});

struct SharpnessRow {
  double L = 0.0;
  double lambda_upper = 0.0;
  double bound_factor = 0.0;  // moment^{(p-q)/q}, or r^p when q = p
  double rho = 0.0;           // lambda_upper * bound_factor / C_{p,q}
};

/// Sharpness table on slabs (-L/2,L/2) x (0,1): rho(L) >= 1 and decreases
/// toward 1 as L grows.
std::vector<SharpnessRow> slab_sharpness(const ExponentPair& e,
                                         const std::vector<double>& Ls,
                                         double h,
                                         const LambdaOptions& opts = {});

/// Polygonal slit annulus (radii 1 and 2, slit along the positive axis), a
/// tooth of half-width eps protruding to 2+eps when eps > 0.  The outer loop
/// is inscribed and the hole circumscribed, so the polygon is contained in
/// the continuum body.
PolygonDomain make_slit_annulus(double eps, double h);

struct CounterexampleResult {
  InequalityReport report;  // lambda * (1/2)^2 vs pi^2/4, strict
  double lambda_upper = 0.0;
  double inradius_lower = 0.0;  // certified inradius of the polygon
  int nodes = 0;
  int triangles = 0;
};

/// Meshes the annulus-with-tooth (slit as a seam) and tests the strict
/// inequality lambda * r^2 < pi^2/4 with r = 1/2.  eps = 0 builds the
/// slit annulus without the tooth (the control with lambda = pi^2).
CounterexampleResult counterexample_annulus_tooth(double eps, double h,
                                                  const LambdaOptions& opts = {});

} // namespace makai
