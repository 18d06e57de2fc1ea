#include "makai/geometry.hpp"

#include "makai/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace makai {

namespace {

constexpr double kEps = 1e-9;

double cross2(const Vec3& a, const Vec3& b) { return a.x() * b.y() - a.y() * b.x(); }

Vec3 centroid_of(const std::vector<Vec3>& pts) {
  Vec3 c = Vec3::Zero();
  for (const auto& p : pts) c += p;
  return pts.empty() ? c : Vec3(c / static_cast<double>(pts.size()));
}

double circumradius_about(const std::vector<Vec3>& pts, const Vec3& c) {
  double s = 0.0;
  for (const auto& p : pts) s = std::max(s, (p - c).norm());
  return s;
}

// Feasible intersections of constraint pairs (2D) / triples (3D).
std::vector<Vec3> enumerate_vertices(int dim, const std::vector<Halfspace>& hs,
                                     double tol) {
  const int m = static_cast<int>(hs.size());
  std::vector<Vec3> verts;
  auto feasible = [&](const Vec3& x) {
    for (const auto& h : hs)
      if (h.normal.dot(x) > h.offset + tol) return false;
    return true;
  };
  auto push_unique = [&](const Vec3& x) {
    for (const auto& v : verts)
      if ((v - x).norm() <= 10 * tol) return;
    verts.push_back(x);
  };

  if (dim == 2) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        const double det = cross2(hs[i].normal, hs[j].normal);
        if (std::abs(det) < 1e-9) continue;
        const double x = (hs[i].offset * hs[j].normal.y() -
                          hs[j].offset * hs[i].normal.y()) / det;
        const double y = (hs[i].normal.x() * hs[j].offset -
                          hs[j].normal.x() * hs[i].offset) / det;
        const Vec3 v(x, y, 0.0);
        if (feasible(v)) push_unique(v);
      }
    }
  } else {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        for (int k = j + 1; k < m; ++k) {
          Eigen::Matrix3d A;
          A.row(0) = hs[i].normal;
          A.row(1) = hs[j].normal;
          A.row(2) = hs[k].normal;
          const double det = A.determinant();
          if (std::abs(det) < 1e-9) continue;
          const Vec3 b(hs[i].offset, hs[j].offset, hs[k].offset);
          const Vec3 v = A.partialPivLu().solve(b);
          if (feasible(v)) push_unique(v);
        }
      }
    }
  }
  return verts;
}

// Monotone chain; returns hull in counterclockwise order.
std::vector<Vec3> convex_hull_2d(std::vector<Vec3> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec3& a, const Vec3& b) {
    if (a.x() != b.x()) return a.x() < b.x();
    return a.y() < b.y();
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec3& a, const Vec3& b) {
                          return (a - b).norm() < 1e-12;
                        }),
            pts.end());
  const int n = static_cast<int>(pts.size());
  if (n < 3) return pts;
  std::vector<Vec3> hull(2 * n);
  int k = 0;
  auto turn = [](const Vec3& o, const Vec3& a, const Vec3& b) {
    return cross2(a - o, b - o);
  };
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], pts[i]) <= 1e-12) --k;
    hull[k++] = pts[i];
  }
  const int lower = k + 1;
  for (int i = n - 2; i >= 0; --i) {
    while (k >= lower && turn(hull[k - 2], hull[k - 1], pts[i]) <= 1e-12) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

// In-plane basis (u1, u2) with u1 x u2 = normal.
void plane_basis(const Vec3& normal, Vec3& u1, Vec3& u2) {
  u1 = std::abs(normal.x()) < 0.9 ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
  u1 = (u1 - u1.dot(normal) * normal).normalized();
  u2 = normal.cross(u1);
}

} // namespace

// --- Simplex -------------------------------------------------------------

double Simplex::volume() const {
  if (dim == 1) return (v[1] - v[0]).norm();
  if (dim == 2)
    return 0.5 * std::abs(cross2(v[1] - v[0], v[2] - v[0]));
  return std::abs((v[1] - v[0]).cross(v[2] - v[0]).dot(v[3] - v[0])) / 6.0;
}

Vec3 Simplex::centroid() const {
  Vec3 c = Vec3::Zero();
  for (int k = 0; k <= dim; ++k) c += v[k];
  return c / static_cast<double>(dim + 1);
}

// --- Polytope ------------------------------------------------------------

double Polytope::signed_margin(const Vec3& x) const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& h : facets_) m = std::min(m, h.offset - h.normal.dot(x));
  return m;
}

double Polytope::distance(const Vec3& x) const {
  return std::max(0.0, signed_margin(x));
}

bool Polytope::contains(const Vec3& x, double tol) const {
  return signed_margin(x) >= -tol;
}

Polytope::InradiusResult Polytope::inradius() const {
  const int m = static_cast<int>(facets_.size());
  Eigen::MatrixXd A(m, dim_ + 1);
  Eigen::VectorXd b(m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < dim_; ++k) A(i, k) = facets_[i].normal[k];
    A(i, dim_) = 1.0;
    b[i] = facets_[i].offset;
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(dim_ + 1);
  c[dim_] = 1.0;
  auto sol = lp::solve_max(A, b, c);
  if (sol.status != lp::Status::optimal)
    throw GeometryError("inradius: Chebyshev LP failed");
  InradiusResult res;
  res.r = sol.value;
  res.center = Vec3::Zero();
  for (int k = 0; k < dim_; ++k) res.center[k] = sol.x[k];
  return res;
}

double Polytope::volume() const {
  double v = 0.0;
  for (const auto& s : triangulate()) v += s.volume();
  return v;
}

double Polytope::diameter() const {
  double d = 0.0;
  for (size_t i = 0; i < vertices_.size(); ++i)
    for (size_t j = i + 1; j < vertices_.size(); ++j)
      d = std::max(d, (vertices_[i] - vertices_[j]).norm());
  return d;
}

std::vector<Simplex> Polytope::triangulate() const {
  // a simplex triangulates as itself
  if (static_cast<int>(vertices_.size()) == dim_ + 1) {
    Simplex s;
    s.dim = dim_;
    for (int k = 0; k <= dim_; ++k) s.v[k] = vertices_[k];
    return {s};
  }
  const Vec3 center = inradius().center;
  std::vector<Simplex> out;
  for (const auto& fv : incidence_) {
    if (dim_ == 2) {
      Simplex s;
      s.dim = 2;
      s.v[0] = center;
      s.v[1] = vertices_[fv[0]];
      s.v[2] = vertices_[fv[1]];
      if (s.volume() > 1e-14 * std::pow(std::max(1.0, scale_), 2)) out.push_back(s);
    } else {
      for (size_t j = 1; j + 1 < fv.size(); ++j) {
        Simplex s;
        s.dim = 3;
        s.v[0] = center;
        s.v[1] = vertices_[fv[0]];
        s.v[2] = vertices_[fv[j]];
        s.v[3] = vertices_[fv[j + 1]];
        if (s.volume() > 1e-14 * std::pow(std::max(1.0, scale_), 3))
          out.push_back(s);
      }
    }
  }
  return out;
}

Polytope Polytope::scaled_about_origin(double s) const {
  if (!(s > 0.0)) throw GeometryError("scaled_about_origin: s must be > 0");
  Polytope q(*this);
  for (auto& v : q.vertices_) v *= s;
  for (auto& h : q.facets_) h.offset *= s;
  q.scale_ *= s;
  return q;
}

Polytope Polytope::build_from_halfspaces(int dim, std::vector<Halfspace> hs,
                                         bool assume_bounded) {
  if (dim != 2 && dim != 3)
    throw GeometryError("Polytope: dimension must be 2 or 3");

  // normalize, merge duplicate normals keeping the tighter offset
  std::vector<Halfspace> cons;
  for (auto h : hs) {
    if (dim == 2 && h.normal.z() != 0.0)
      throw GeometryError("Polytope: 2D halfspace normals must have z = 0");
    const double nn = h.normal.norm();
    if (nn < 1e-12) continue;  // vacuous or infeasible row; caller-level issue
    h.normal /= nn;
    h.offset /= nn;
    bool merged = false;
    for (auto& g : cons) {
      if (g.normal.dot(h.normal) > 1.0 - 1e-12) {
        g.offset = std::min(g.offset, h.offset);
        merged = true;
        break;
      }
    }
    if (!merged) cons.push_back(h);
  }
  if (static_cast<int>(cons.size()) < dim + 1)
    throw GeometryError("Polytope: too few constraints to bound a body");

  if (!assume_bounded) {
    const int m = static_cast<int>(cons.size());
    Eigen::MatrixXd A(m, dim);
    Eigen::VectorXd b(m);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < dim; ++k) A(i, k) = cons[i].normal[k];
      b[i] = cons[i].offset;
    }
    for (int k = 0; k < dim; ++k) {
      for (double sgn : {1.0, -1.0}) {
        Eigen::VectorXd c = Eigen::VectorXd::Zero(dim);
        c[k] = sgn;
        auto sol = lp::solve_max(A, b, c);
        if (sol.status == lp::Status::unbounded)
          throw GeometryError("Polytope: halfspace intersection is unbounded");
        if (sol.status == lp::Status::infeasible)
          throw GeometryError("Polytope: halfspace intersection is empty");
      }
    }
  }

  // first pass at input scale to locate the body
  double s0 = 1.0;
  for (const auto& h : cons) s0 = std::max(s0, std::abs(h.offset));
  std::vector<Vec3> rough = enumerate_vertices(dim, cons, kEps * s0);
  if (rough.empty())
    throw GeometryError("Polytope: no vertices (empty or degenerate body)");
  const Vec3 c0 = centroid_of(rough);
  const double scl = std::max(circumradius_about(rough, c0), 1e-12);

  // second pass in the unit-circumradius frame
  std::vector<Halfspace> scaled = cons;
  for (auto& h : scaled) h.offset = (h.offset - h.normal.dot(c0)) / scl;
  std::vector<Vec3> sverts = enumerate_vertices(dim, scaled, kEps);
  if (static_cast<int>(sverts.size()) < dim + 1)
    throw GeometryError("Polytope: not full-dimensional");

  // full-dimensionality via Chebyshev radius in the scaled frame
  {
    const int m = static_cast<int>(scaled.size());
    Eigen::MatrixXd A(m, dim + 1);
    Eigen::VectorXd b(m);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < dim; ++k) A(i, k) = scaled[i].normal[k];
      A(i, dim) = 1.0;
      b[i] = scaled[i].offset;
    }
    Eigen::VectorXd obj = Eigen::VectorXd::Zero(dim + 1);
    obj[dim] = 1.0;
    auto sol = lp::solve_max(A, b, obj);
    if (sol.status != lp::Status::optimal || sol.value < 1e-9)
      throw GeometryError("Polytope: not full-dimensional");
  }

  // incidence in scaled frame, facet pruning by affine rank of touching set
  const double itol = 1e-7;
  std::vector<std::vector<int>> inc(scaled.size());
  for (size_t i = 0; i < scaled.size(); ++i) {
    for (size_t v = 0; v < sverts.size(); ++v) {
      if (std::abs(scaled[i].normal.dot(sverts[v]) - scaled[i].offset) <= itol)
        inc[i].push_back(static_cast<int>(v));
    }
  }
  std::vector<int> keep;
  for (size_t i = 0; i < scaled.size(); ++i) {
    const auto& I = inc[i];
    bool genuine = false;
    if (dim == 2) {
      for (size_t a = 0; a < I.size() && !genuine; ++a)
        for (size_t b2 = a + 1; b2 < I.size() && !genuine; ++b2)
          if ((sverts[I[a]] - sverts[I[b2]]).norm() > 100 * kEps) genuine = true;
    } else {
      for (size_t a = 0; a < I.size() && !genuine; ++a)
        for (size_t b2 = a + 1; b2 < I.size() && !genuine; ++b2)
          for (size_t c2 = b2 + 1; c2 < I.size() && !genuine; ++c2)
            if ((sverts[I[b2]] - sverts[I[a]])
                    .cross(sverts[I[c2]] - sverts[I[a]])
                    .norm() > 1e-12)
              genuine = true;
    }
    if (genuine) keep.push_back(static_cast<int>(i));
  }

  // vertices used by at least one genuine facet, mapped back to input frame
  std::vector<int> vkeep(sverts.size(), -1);
  std::vector<Vec3> final_verts;
  std::vector<Halfspace> final_facets;
  std::vector<std::vector<int>> final_inc;
  for (int fi : keep) {
    for (int vi : inc[fi]) {
      if (vkeep[vi] < 0) {
        vkeep[vi] = static_cast<int>(final_verts.size());
        final_verts.push_back(c0 + scl * sverts[vi]);
      }
    }
  }
  for (int fi : keep) {
    final_facets.push_back(cons[fi]);
    std::vector<int> fv;
    for (int vi : inc[fi]) fv.push_back(vkeep[vi]);
    final_inc.push_back(std::move(fv));
  }

  Polytope P;
  P.dim_ = dim;
  P.facets_ = std::move(final_facets);
  P.vertices_ = std::move(final_verts);
  P.incidence_ = std::move(final_inc);
  const Vec3 cc = centroid_of(P.vertices_);
  P.scale_ = circumradius_about(P.vertices_, cc);

  // order each facet's vertices cyclically (2D: along the CCW tangent)
  for (size_t i = 0; i < P.facets_.size(); ++i) {
    auto& fv = P.incidence_[i];
    const Vec3 n = P.facets_[i].normal;
    if (dim == 2) {
      const Vec3 t(-n.y(), n.x(), 0.0);
      std::sort(fv.begin(), fv.end(), [&](int a, int b) {
        return t.dot(P.vertices_[a]) < t.dot(P.vertices_[b]);
      });
      if (fv.size() != 2) throw GeometryError("Polytope: malformed 2D facet");
    } else {
      Vec3 u1, u2;
      plane_basis(n, u1, u2);
      Vec3 fc = Vec3::Zero();
      for (int vi : fv) fc += P.vertices_[vi];
      fc /= static_cast<double>(fv.size());
      std::sort(fv.begin(), fv.end(), [&](int a, int b) {
        const Vec3 da = P.vertices_[a] - fc, db = P.vertices_[b] - fc;
        return std::atan2(u2.dot(da), u1.dot(da)) <
               std::atan2(u2.dot(db), u1.dot(db));
      });
      if (fv.size() < 3) throw GeometryError("Polytope: malformed 3D facet");
    }
  }

  // 2D: keep the global vertex list in CCW order about the centroid
  if (dim == 2) {
    std::vector<int> order(P.vertices_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const Vec3 da = P.vertices_[a] - cc, db = P.vertices_[b] - cc;
      return std::atan2(da.y(), da.x()) < std::atan2(db.y(), db.x());
    });
    std::vector<int> rank(order.size());
    for (size_t k = 0; k < order.size(); ++k) rank[order[k]] = static_cast<int>(k);
    std::vector<Vec3> nv(P.vertices_.size());
    for (size_t v = 0; v < P.vertices_.size(); ++v) nv[rank[v]] = P.vertices_[v];
    P.vertices_ = std::move(nv);
    for (auto& fv : P.incidence_)
      for (int& vi : fv) vi = rank[vi];
    for (size_t i = 0; i < P.incidence_.size(); ++i) {
      auto& fv = P.incidence_[i];
      const Vec3 n = P.facets_[i].normal;
      const Vec3 t(-n.y(), n.x(), 0.0);
      if (t.dot(P.vertices_[fv[1]] - P.vertices_[fv[0]]) < 0.0)
        std::swap(fv[0], fv[1]);
    }
  }

  // validation: vertices satisfy all constraints
  for (const auto& v : P.vertices_)
    if (P.signed_margin(v) < -1e-9 * std::max(1.0, P.scale_))
      throw GeometryError("Polytope: vertex violates constraints");
  return P;
}

Polytope Polytope::from_halfspaces(int dim, const std::vector<Halfspace>& hs) {
  return build_from_halfspaces(dim, hs, false);
}

Polytope Polytope::from_vertices(int dim, const std::vector<Vec3>& points) {
  if (dim != 2 && dim != 3)
    throw GeometryError("Polytope: dimension must be 2 or 3");
  if (static_cast<int>(points.size()) < dim + 1)
    throw GeometryError("Polytope: too few points");
  for (const auto& p : points)
    if (dim == 2 && p.z() != 0.0)
      throw GeometryError("Polytope: 2D points must have z = 0");

  const Vec3 c0 = centroid_of(points);
  const double scl = std::max(circumradius_about(points, c0), 1e-300);
  std::vector<Vec3> sp;
  sp.reserve(points.size());
  for (const auto& p : points) sp.push_back((p - c0) / scl);

  // affine rank check
  Eigen::MatrixXd M(points.size(), dim);
  for (size_t i = 0; i < sp.size(); ++i)
    for (int k = 0; k < dim; ++k) M(i, k) = sp[i][k];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  if (svd.singularValues()[dim - 1] < 1e-9 * svd.singularValues()[0])
    throw GeometryError("Polytope: points do not span the dimension");

  if (dim == 2) {
    std::vector<Vec3> hull = convex_hull_2d(sp);
    if (hull.size() < 3)
      throw GeometryError("Polytope: points do not span the dimension");
    std::vector<Halfspace> hs;
    for (size_t k = 0; k < hull.size(); ++k) {
      const Vec3 a = c0 + scl * hull[k];
      const Vec3 b = c0 + scl * hull[(k + 1) % hull.size()];
      const Vec3 e = b - a;
      Halfspace h;
      h.normal = Vec3(e.y(), -e.x(), 0.0).normalized();
      h.offset = h.normal.dot(a);
      hs.push_back(h);
    }
    return build_from_halfspaces(2, hs, true);
  }

  // 3D: support planes from point triples (desk-scale brute force)
  if (points.size() > 200)
    throw GeometryError("Polytope: too many points for 3D hull");
  std::vector<Halfspace> planes;
  const int n = static_cast<int>(sp.size());
  auto consider = [&](const Vec3& nrm, double off) {
    for (const auto& q : sp)
      if (nrm.dot(q) > off + kEps) return;
    for (auto& h : planes)
      if (h.normal.dot(nrm) > 1.0 - 1e-10 && std::abs(h.offset - off) < 1e-8)
        return;
    planes.push_back({nrm, off});
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Vec3 nrm = (sp[j] - sp[i]).cross(sp[k] - sp[i]);
        if (nrm.norm() < 1e-10) continue;
        nrm.normalize();
        consider(nrm, nrm.dot(sp[i]));
        consider(-nrm, -nrm.dot(sp[i]));
      }
    }
  }
  // map planes to the original frame
  for (auto& h : planes) h.offset = scl * h.offset + h.normal.dot(c0);
  return build_from_halfspaces(3, planes, true);
}

// --- nearest-facet partition ----------------------------------------------

std::vector<FacetCell> facet_partition(const Polytope& P) {
  const auto& F = P.facets();
  const int h = static_cast<int>(F.size());
  std::vector<FacetCell> cells;
  cells.reserve(h);
  for (int i = 0; i < h; ++i) {
    std::vector<Halfspace> cons = F;
    for (int j = 0; j < h; ++j) {
      if (j == i) continue;
      // dominance: b_i - a_i.x <= b_j - a_j.x on the cell, i.e. the exact
      // linear form (a_j - a_i).x <= b_j - b_i
      Halfspace d;
      d.normal = F[j].normal - F[i].normal;
      d.offset = F[j].offset - F[i].offset;
      if (d.normal.norm() < 1e-12) continue;
      cons.push_back(d);
    }
    cells.push_back(FacetCell{
        i, F[i], Polytope::build_from_halfspaces(P.dimension(), cons, true)});
  }
  return cells;
}

double cell_height(const FacetCell& cell, const Vec3& y) {
  const Polytope& C = cell.cell;
  const double tol = C.tolerance();
  const Vec3 a = cell.base.normal;

  if (std::abs(a.dot(y) - cell.base.offset) > tol)
    throw GeometryError("cell_height: point not on the base hyperplane");
  if (C.signed_margin(y) < -tol)
    throw GeometryError("cell_height: point outside the cell");

  // locate the cell facet matching the base hyperplane; its vertex set is
  // the base facet S_i of the parent
  int fi = -1;
  for (size_t k = 0; k < C.facets().size(); ++k) {
    if (C.facets()[k].normal.dot(a) > 1.0 - 1e-10 &&
        std::abs(C.facets()[k].offset - cell.base.offset) <= tol) {
      fi = static_cast<int>(k);
      break;
    }
  }
  if (fi < 0) throw GeometryError("cell_height: base facet not found");
  const auto& fv = C.facet_vertices()[fi];

  // relative-interior check with margin
  const double margin = tol;
  if (C.dimension() == 2) {
    const Vec3 w0 = C.vertices()[fv[0]], w1 = C.vertices()[fv[1]];
    const Vec3 e = w1 - w0;
    const double t = e.dot(y - w0) / e.squaredNorm();
    if (!(t * e.norm() > margin && (1.0 - t) * e.norm() > margin))
      throw GeometryError("cell_height: point not in facet relative interior");
  } else {
    Vec3 u1, u2;
    plane_basis(a, u1, u2);
    const size_t nfv = fv.size();
    // polygon is cyclically ordered; require margin against each edge line
    double orient = 0.0;
    for (size_t k = 0; k < nfv; ++k) {
      const Vec3 p0 = C.vertices()[fv[k]], p1 = C.vertices()[fv[(k + 1) % nfv]];
      orient += (u1.dot(p1) - u1.dot(p0)) * (u2.dot(p1) + u2.dot(p0));
    }
    const double sgn = orient < 0.0 ? 1.0 : -1.0;  // CCW in (u1,u2) iff sum<0
    for (size_t k = 0; k < nfv; ++k) {
      const Vec3 p0 = C.vertices()[fv[k]], p1 = C.vertices()[fv[(k + 1) % nfv]];
      const Vec3 e = p1 - p0;
      const double cr = (u1.dot(e) * (u2.dot(y) - u2.dot(p0)) -
                         u2.dot(e) * (u1.dot(y) - u1.dot(p0)));
      if (sgn * cr < margin * e.norm())
        throw GeometryError("cell_height: point not in facet relative interior");
    }
  }

  // 1D clip of the inward ray y - t a against the cell constraints
  double f = std::numeric_limits<double>::infinity();
  for (const auto& hq : C.facets()) {
    const double dir = hq.normal.dot(a);
    if (dir < -1e-14) {
      const double ub = (hq.normal.dot(y) - hq.offset) / dir;
      f = std::min(f, ub);
    }
  }
  if (!std::isfinite(f))
    throw GeometryError("cell_height: unbounded ray (corrupt cell)");
  return std::max(0.0, f);
}

// --- stock bodies ----------------------------------------------------------

Polytope make_box(int dim, const Vec3& lo, const Vec3& hi) {
  std::vector<Vec3> pts;
  if (dim == 2) {
    pts = {Vec3(lo.x(), lo.y(), 0), Vec3(hi.x(), lo.y(), 0),
           Vec3(hi.x(), hi.y(), 0), Vec3(lo.x(), hi.y(), 0)};
  } else {
    for (int m = 0; m < 8; ++m)
      pts.emplace_back(m & 1 ? hi.x() : lo.x(), m & 2 ? hi.y() : lo.y(),
                       m & 4 ? hi.z() : lo.z());
  }
  return Polytope::from_vertices(dim, pts);
}

Polytope make_regular_ngon(int n, double circumradius) {
  if (n < 3) throw GeometryError("make_regular_ngon: n >= 3");
  std::vector<Vec3> pts;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * M_PI * k / n;
    pts.emplace_back(circumradius * std::cos(t), circumradius * std::sin(t), 0.0);
  }
  return Polytope::from_vertices(2, pts);
}

Polytope make_simplex3d() {
  return Polytope::from_vertices(
      3, {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)});
}

Polytope make_slab(int dim, double L) {
  if (dim == 2) return make_box(2, Vec3(-L / 2, 0, 0), Vec3(L / 2, 1, 0));
  return make_box(3, Vec3(-L / 2, -L / 2, 0), Vec3(L / 2, L / 2, 1));
}

} // namespace makai
