#include "makai/spectral.hpp"

#include "makai/constants.hpp"
#include "makai/measure.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace makai {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Trip = Eigen::Triplet<double>;

struct Assembly {
  std::vector<int> dof;  // node -> free dof or -1
  int ndof = 0;
  SpMat K, M;
  Eigen::VectorXd load;  // int phi_i
};

Assembly assemble(const TriangleMesh& mesh) {
  Assembly A;
  const int nn = mesh.node_count();
  A.dof.assign(nn, -1);
  for (int v = 0; v < nn; ++v)
    if (!mesh.fixed()[v]) A.dof[v] = A.ndof++;
  if (A.ndof == 0) throw std::runtime_error("spectral: no free nodes");

  std::vector<Trip> kt, mt;
  A.load = Eigen::VectorXd::Zero(A.ndof);
  for (const auto& t : mesh.triangles()) {
    const Vec2 &p0 = mesh.nodes()[t[0]], &p1 = mesh.nodes()[t[1]],
               &p2 = mesh.nodes()[t[2]];
    const double det = (p1.x() - p0.x()) * (p2.y() - p0.y()) -
                       (p1.y() - p0.y()) * (p2.x() - p0.x());
    const double area = 0.5 * std::abs(det);
    Vec2 g[3];
    g[0] = Vec2(p1.y() - p2.y(), p2.x() - p1.x()) / det;
    g[1] = Vec2(p2.y() - p0.y(), p0.x() - p2.x()) / det;
    g[2] = Vec2(p0.y() - p1.y(), p1.x() - p0.x()) / det;
    for (int i = 0; i < 3; ++i) {
      const int di = A.dof[t[i]];
      if (di < 0) continue;
      A.load[di] += area / 3.0;
      for (int j = 0; j < 3; ++j) {
        const int dj = A.dof[t[j]];
        if (dj < 0) continue;
        kt.emplace_back(di, dj, area * g[i].dot(g[j]));
        mt.emplace_back(di, dj, area / (i == j ? 6.0 : 12.0));
      }
    }
  }
  A.K.resize(A.ndof, A.ndof);
  A.M.resize(A.ndof, A.ndof);
  A.K.setFromTriplets(kt.begin(), kt.end());
  A.M.setFromTriplets(mt.begin(), mt.end());
  return A;
}

// 7-point degree-5 rule on the reference triangle (barycentric, weights sum 1)
constexpr int kQn = 7;
const double kQw[kQn] = {0.225,
                         0.1259391805448272, 0.1259391805448272,
                         0.1259391805448272, 0.1323941527885062,
                         0.1323941527885062, 0.1323941527885062};
const double kQb[kQn][3] = {
    {1.0 / 3, 1.0 / 3, 1.0 / 3},
    {0.7974269853530873, 0.1012865073234563, 0.1012865073234563},
    {0.1012865073234563, 0.7974269853530873, 0.1012865073234563},
    {0.1012865073234563, 0.1012865073234563, 0.7974269853530873},
    {0.0597158717897698, 0.4701420641051151, 0.4701420641051151},
    {0.4701420641051151, 0.0597158717897698, 0.4701420641051151},
    {0.4701420641051151, 0.4701420641051151, 0.0597158717897698}};

// Sub-triangles of a triangle split along the zero line of the linear nodal
// function; each sub-triangle is single-signed.  Corners carry parent
// barycentric coordinates.
struct SubTri {
  double bary[3][3];
  double sign;
};

int split_by_sign(const double u[3], SubTri out[3]) {
  const double umax =
      std::max({std::abs(u[0]), std::abs(u[1]), std::abs(u[2])});
  const double tol = 1e-14 * (umax > 0 ? umax : 1.0);
  const bool pos = u[0] > tol || u[1] > tol || u[2] > tol;
  const bool neg = u[0] < -tol || u[1] < -tol || u[2] < -tol;
  if (!pos && !neg) return 0;
  if (!(pos && neg)) {
    SubTri& s = out[0];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s.bary[i][j] = (i == j) ? 1.0 : 0.0;
    s.sign = pos ? 1.0 : -1.0;
    return 1;
  }
  // lone vertex X whose sign differs from the other two
  int X = 0;
  for (int i = 0; i < 3; ++i) {
    const int a = (i + 1) % 3, b = (i + 2) % 3;
    if ((u[i] > tol) != (u[a] > tol) && (u[i] > tol) != (u[b] > tol)) {
      X = i;
      break;
    }
  }
  const int Y = (X + 1) % 3, Z = (X + 2) % 3;
  const double ty = u[X] / (u[X] - u[Y]);
  const double tz = u[X] / (u[X] - u[Z]);
  auto corner = [](SubTri& s, int c, int vertex, double t, int other) {
    for (int j = 0; j < 3; ++j) s.bary[c][j] = 0.0;
    if (other < 0) {
      s.bary[c][vertex] = 1.0;
    } else {
      s.bary[c][vertex] = 1.0 - t;
      s.bary[c][other] = t;
    }
  };
  corner(out[0], 0, X, 0.0, -1);
  corner(out[0], 1, X, ty, Y);
  corner(out[0], 2, X, tz, Z);
  out[0].sign = u[X] > 0 ? 1.0 : -1.0;
  corner(out[1], 0, X, ty, Y);
  corner(out[1], 1, Y, 0.0, -1);
  corner(out[1], 2, Z, 0.0, -1);
  out[1].sign = -out[0].sign;
  corner(out[2], 0, X, ty, Y);
  corner(out[2], 1, Z, 0.0, -1);
  corner(out[2], 2, X, tz, Z);
  out[2].sign = -out[0].sign;
  return 3;
}

double sub_area(const Vec2& p0, const Vec2& p1, const Vec2& p2,
                const SubTri& s) {
  Vec2 q[3];
  for (int c = 0; c < 3; ++c)
    q[c] = s.bary[c][0] * p0 + s.bary[c][1] * p1 + s.bary[c][2] * p2;
  return 0.5 * std::abs((q[1] - q[0]).x() * (q[2] - q[0]).y() -
                        (q[1] - q[0]).y() * (q[2] - q[0]).x());
}

// exact integral of |u|^q over one triangle via the simplex kernel
double abs_power_integral(const Vec2& p0, const Vec2& p1, const Vec2& p2,
                          const double u[3], double q) {
  SubTri subs[3];
  const int ns = split_by_sign(u, subs);
  double total = 0.0;
  for (int s = 0; s < ns; ++s) {
    Simplex sim;
    sim.dim = 2;
    for (int c = 0; c < 3; ++c) {
      const Vec2 qc = subs[s].bary[c][0] * p0 + subs[s].bary[c][1] * p1 +
                      subs[s].bary[c][2] * p2;
      sim.v[c] = Vec3(qc.x(), qc.y(), 0.0);
    }
    double vals[3];
    for (int c = 0; c < 3; ++c) {
      const double uv = subs[s].bary[c][0] * u[0] + subs[s].bary[c][1] * u[1] +
                        subs[s].bary[c][2] * u[2];
      vals[c] = std::abs(uv);
    }
    total += simplex_linear_power(sim, vals, q);
  }
  return total;
}

struct QuotientParts {
  double energy = 0.0;  // int |grad u|^p
  double mass_q = 0.0;  // int |u|^q
};

QuotientParts quotient_parts(const TriangleMesh& mesh,
                             const std::vector<double>& u, double p,
                             double q) {
  QuotientParts out;
  for (const auto& t : mesh.triangles()) {
    const Vec2 &p0 = mesh.nodes()[t[0]], &p1 = mesh.nodes()[t[1]],
               &p2 = mesh.nodes()[t[2]];
    const double det = (p1.x() - p0.x()) * (p2.y() - p0.y()) -
                       (p1.y() - p0.y()) * (p2.x() - p0.x());
    const double area = 0.5 * std::abs(det);
    const Vec2 g =
        (u[t[1]] - u[t[0]]) * Vec2(p2.y() - p0.y(), p0.x() - p2.x()) / det +
        (u[t[2]] - u[t[0]]) * Vec2(p0.y() - p1.y(), p1.x() - p0.x()) / det;
    out.energy += area * std::pow(g.norm(), p);
    const double uv[3] = {u[t[0]], u[t[1]], u[t[2]]};
    out.mass_q += abs_power_integral(p0, p1, p2, uv, q);
  }
  return out;
}

void quotient_gradients(const TriangleMesh& mesh, const Assembly& A,
                        const std::vector<double>& u, double p, double q,
                        Eigen::VectorXd& dE, Eigen::VectorXd& dQ) {
  dE.setZero(A.ndof);
  dQ.setZero(A.ndof);
  for (const auto& t : mesh.triangles()) {
    const Vec2 &p0 = mesh.nodes()[t[0]], &p1 = mesh.nodes()[t[1]],
               &p2 = mesh.nodes()[t[2]];
    const double det = (p1.x() - p0.x()) * (p2.y() - p0.y()) -
                       (p1.y() - p0.y()) * (p2.x() - p0.x());
    const double area = 0.5 * std::abs(det);
    Vec2 gb[3];
    gb[0] = Vec2(p1.y() - p2.y(), p2.x() - p1.x()) / det;
    gb[1] = Vec2(p2.y() - p0.y(), p0.x() - p2.x()) / det;
    gb[2] = Vec2(p0.y() - p1.y(), p1.x() - p0.x()) / det;
    const Vec2 g = u[t[0]] * gb[0] + u[t[1]] * gb[1] + u[t[2]] * gb[2];
    const double gn = g.norm();
    if (gn > 0.0) {
      const double f = area * p * std::pow(gn, p - 2.0);
      for (int i = 0; i < 3; ++i) {
        const int d = A.dof[t[i]];
        if (d >= 0) dE[d] += f * g.dot(gb[i]);
      }
    }
    const double uv[3] = {u[t[0]], u[t[1]], u[t[2]]};
    SubTri subs[3];
    const int ns = split_by_sign(uv, subs);
    for (int s = 0; s < ns; ++s) {
      const double sa = sub_area(p0, p1, p2, subs[s]);
      if (sa <= 0.0) continue;
      for (int k = 0; k < kQn; ++k) {
        double bp[3] = {0, 0, 0};
        for (int c = 0; c < 3; ++c)
          for (int j = 0; j < 3; ++j) bp[j] += kQb[k][c] * subs[s].bary[c][j];
        const double uval = bp[0] * uv[0] + bp[1] * uv[1] + bp[2] * uv[2];
        const double au = std::abs(uval);
        if (au == 0.0) continue;
        const double w =
            sa * kQw[k] * q * std::pow(au, q - 1.0) * (uval > 0 ? 1.0 : -1.0);
        for (int j = 0; j < 3; ++j) {
          const int d = A.dof[t[j]];
          if (d >= 0) dQ[d] += w * bp[j];
        }
      }
    }
  }
}

std::vector<double> scatter(const TriangleMesh& mesh, const Assembly& A,
                            const Eigen::VectorXd& x) {
  std::vector<double> u(mesh.node_count(), 0.0);
  for (int v = 0; v < mesh.node_count(); ++v)
    if (A.dof[v] >= 0) u[v] = x[A.dof[v]];
  return u;
}

} // namespace

namespace detail {
double abs_power_over_triangle(const Vec2& p0, const Vec2& p1, const Vec2& p2,
                               const double values[3], double q) {
  return abs_power_integral(p0, p1, p2, values, q);
}
} // namespace detail

InequalityReport make_report(std::string id, double left, double right,
                             double tolerance, std::string direction,
                             std::string left_prov, std::string right_prov) {
  InequalityReport r;
  r.id = std::move(id);
  r.left = left;
  r.right = right;
  r.ratio =
      right != 0.0 ? left / right : std::numeric_limits<double>::infinity();
  r.tolerance = tolerance;
  r.direction = std::move(direction);
  if (r.direction == "le")
    r.pass = left <= right * (1.0 + tolerance);
  else if (r.direction == "lt")
    r.pass = left < right;
  else if (r.direction == "ge")
    r.pass = left >= right * (1.0 - tolerance);
  else
    throw std::invalid_argument("InequalityReport: unknown direction");
  r.left_provenance = std::move(left_prov);
  r.right_provenance = std::move(right_prov);
  return r;
}

double rayleigh_pq(const TriangleMesh& mesh, const DiscreteField& u,
                   const ExponentPair& e) {
  if (static_cast<int>(u.values.size()) != mesh.node_count())
    throw std::invalid_argument("rayleigh_pq: field size mismatch");
  for (int v = 0; v < mesh.node_count(); ++v)
    if (mesh.fixed()[v] && u.values[v] != 0.0)
      throw std::invalid_argument("rayleigh_pq: nonzero value on fixed node");
  const auto parts = quotient_parts(mesh, u.values, e.p(), e.q());
  if (parts.mass_q <= 0.0)
    throw std::domain_error("rayleigh_pq: field is identically zero");
  return parts.energy / std::pow(parts.mass_q, e.p() / e.q());
}

LambdaResult minimize_lambda(const TriangleMesh& mesh, const ExponentPair& e,
                             const LambdaOptions& opts) {
  Assembly A = assemble(mesh);
  Eigen::SimplicialLDLT<SpMat> solver;
  solver.compute(A.K);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("minimize_lambda: stiffness factorization failed");

  LambdaResult res;

  if (e.p() == 2.0 && e.q() == 1.0) {
    // torsion route: maximize (int u)^2 / int |grad u|^2 by a single solve
    const Eigen::VectorXd w = solver.solve(A.load);
    res.field.values = scatter(mesh, A, w);
    res.converged = true;
    res.iterations = 1;
    res.lambda_upper = rayleigh_pq(mesh, res.field, e);
    return res;
  }

  // (2,2) inverse power iteration (also the seed for general exponents)
  Eigen::VectorXd x = Eigen::VectorXd::Ones(A.ndof);
  x /= std::sqrt(x.dot(A.M * x));
  double lambda = x.dot(A.K * x);
  int it = 0;
  bool power_converged = false;
  for (; it < opts.max_power_iterations; ++it) {
    Eigen::VectorXd y = solver.solve(A.M * x);
    y /= std::sqrt(y.dot(A.M * y));
    const double lam = y.dot(A.K * y);
    x = y;
    if (std::abs(lam - lambda) <= opts.tol * std::abs(lam)) {
      lambda = lam;
      power_converged = true;
      ++it;
      break;
    }
    lambda = lam;
  }
  if (e.p() == 2.0 && e.q() == 2.0) {
    res.field.values = scatter(mesh, A, x);
    res.converged = power_converged;
    res.iterations = it;
    res.lambda_upper = rayleigh_pq(mesh, res.field, e);
    return res;
  }

  // general (p,q): preconditioned normalized subgradient descent; the value
  // never increases (backtracking enforces strict decrease)
  const double p = e.p(), q = e.q();
  std::vector<double> u = scatter(mesh, A, x);
  auto value_of = [&](const std::vector<double>& v) {
    const auto parts = quotient_parts(mesh, v, p, q);
    return parts.energy / std::pow(parts.mass_q, p / q);
  };
  double value = value_of(u);
  res.descent_history.push_back(value);

  Eigen::VectorXd dE(A.ndof), dQ(A.ndof);
  std::vector<double> trial(u.size());
  double step = 0.25;
  int dit = 0;
  bool converged = false;
  int patience = 0;
  for (; dit < opts.max_descent_iterations; ++dit) {
    const auto parts = quotient_parts(mesh, u, p, q);
    quotient_gradients(mesh, A, u, p, q, dE, dQ);
    const double qf = std::pow(parts.mass_q, p / q);
    Eigen::VectorXd g =
        (dE - (p / q) * (parts.energy / parts.mass_q) * dQ) / qf;
    Eigen::VectorXd dir = solver.solve(g);
    const double dn = dir.norm();
    if (dn < 1e-300) {
      converged = true;
      break;
    }
    double umax = 0.0;
    for (double v : u) umax = std::max(umax, std::abs(v));
    bool accepted = false;
    double trial_value = value;
    while (step > 1e-15) {
      for (int v = 0; v < mesh.node_count(); ++v) {
        trial[v] = u[v];
        if (A.dof[v] >= 0) trial[v] -= step * umax / dn * dir[A.dof[v]];
      }
      trial_value = value_of(trial);
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
    const double rel = (value - trial_value) / std::max(value, 1e-300);
    u.swap(trial);
    value = trial_value;
    res.descent_history.push_back(value);
    step = std::min(step * 1.5, 1.0);
    if (rel < opts.tol) {
      if (++patience >= 8) {
        converged = true;
        break;
      }
    } else {
      patience = 0;
    }
  }
  res.field.values = std::move(u);
  res.converged = converged;
  res.iterations = it + dit;
  res.lambda_upper = rayleigh_pq(mesh, res.field, e);
  return res;
}

std::vector<Vec2> polygon_of(const Polytope& P) {
  if (P.dimension() != 2)
    throw GeometryError("polygon_of: planar polytopes only");
  std::vector<Vec2> poly;
  poly.reserve(P.vertices().size());
  for (const auto& v : P.vertices()) poly.emplace_back(v.x(), v.y());
  return poly;
}

InequalityReport verify_makai(const Polytope& P, const ExponentPair& e,
                              double h, const LambdaOptions& opts) {
  const double lower = makai_lower_bound(P, e);
  TriangleMesh mesh = mesh_polygon(polygon_of(P), h);
  const auto lam = minimize_lambda(mesh, e, opts);
  return make_report("makai", lower, lam.lambda_upper, 1e-9, "le",
                     "C_{p,q} / moment^{(p-q)/q} (exact)",
                     "FEM Rayleigh upper bound");
}

std::vector<SharpnessRow> slab_sharpness(const ExponentPair& e,
                                         const std::vector<double>& Ls,
                                         double h, const LambdaOptions& opts) {
  std::vector<SharpnessRow> rows;
  for (double L : Ls) {
    if (!(L >= 1.0))
      throw std::invalid_argument("slab_sharpness: L >= 1 required");
    Polytope S = make_slab(2, L);
    TriangleMesh mesh = mesh_polygon(polygon_of(S), h);
    const auto lam = minimize_lambda(mesh, e, opts);
    SharpnessRow row;
    row.L = L;
    row.lambda_upper = lam.lambda_upper;
    const double alpha = moment_exponent(e);
    double cpq;
    if (std::isfinite(alpha)) {
      const double m = distance_moment(S, alpha).value;
      row.bound_factor = std::pow(m, (e.p() - e.q()) / e.q());
      cpq = c_pq(e);
    } else {
      row.bound_factor = std::pow(S.inradius().r, e.p());
      cpq = std::pow(pi_p(e.p()) / 2.0, e.p());
    }
    row.rho = row.lambda_upper * row.bound_factor / cpq;
    rows.push_back(row);
  }
  return rows;
}

PolygonDomain make_slit_annulus(double eps, double h) {
  if (!(eps >= 0.0 && eps < 1.0))
    throw std::invalid_argument("make_slit_annulus: need 0 <= eps < 1");
  PolygonDomain d;

  // hole: tangential polygon of the unit circle (contains it); (1,0) sits on
  // the edge tangent at angle 0 and carries the slit junction
  const int n_in = std::max(16, static_cast<int>(std::ceil(2.0 * M_PI / h)));
  const double R_in = 1.0 / std::cos(M_PI / n_in);
  std::vector<Vec2> hole;
  hole.emplace_back(1.0, 0.0);
  for (int k = 0; k < n_in; ++k) {
    const double a = (2.0 * k + 1.0) * M_PI / n_in;
    hole.emplace_back(R_in * std::cos(a), R_in * std::sin(a));
  }
  d.holes.push_back(hole);

  // outer loop: inscribed polygon of the radius-2 circle; with a tooth the
  // arc spans [alpha0, 2 pi - alpha0] and the tooth edges close the loop
  const int n_out = std::max(32, static_cast<int>(std::ceil(4.0 * M_PI / h)));
  if (eps > 0.0) {
    const double alpha0 = std::asin(eps / 2.0);
    for (int k = 0; k <= n_out; ++k) {
      const double a = alpha0 + (2.0 * M_PI - 2.0 * alpha0) * k / n_out;
      d.outer.emplace_back(2.0 * std::cos(a), 2.0 * std::sin(a));
    }
    d.outer.emplace_back(2.0 + eps, -eps);
    d.outer.emplace_back(2.0 + eps, 0.0);  // slit junction
    d.outer.emplace_back(2.0 + eps, eps);
    d.slits.push_back({Vec2(1.0, 0.0), Vec2(2.0 + eps, 0.0)});
  } else {
    for (int k = 0; k < n_out; ++k) {
      const double a = 2.0 * M_PI * k / n_out;
      d.outer.emplace_back(2.0 * std::cos(a), 2.0 * std::sin(a));
    }
    d.slits.push_back({Vec2(1.0, 0.0), Vec2(2.0, 0.0)});
  }
  return d;
}

CounterexampleResult counterexample_annulus_tooth(double eps, double h,
                                                  const LambdaOptions& opts) {
  PolygonDomain domain = make_slit_annulus(eps, h);
  TriangleMesh mesh = mesh_polygon(domain, h);
  const auto lam = minimize_lambda(mesh, ExponentPair(2.0, 2.0), opts);

  CounterexampleResult out;
  out.lambda_upper = lam.lambda_upper;
  out.nodes = mesh.node_count();
  out.triangles = mesh.triangle_count();
  const int n_in = std::max(16, static_cast<int>(std::ceil(2.0 * M_PI / h)));
  const int n_out = std::max(32, static_cast<int>(std::ceil(4.0 * M_PI / h)));
  out.inradius_lower =
      0.5 * (2.0 * std::cos(M_PI / n_out) - 1.0 / std::cos(M_PI / n_in));
  // the continuum body has inradius exactly 1/2 and contains the polygon, so
  // lambda_upper bounds its principal frequency from above
  out.report = make_report(
      "counterexample_annulus_tooth", lam.lambda_upper * 0.25,
      M_PI * M_PI / 4.0, 0.0, "lt", "FEM lambda upper bound times (1/2)^2",
      "pi^2/4 (sharp convex constant)");
  return out;
}

} // namespace makai
