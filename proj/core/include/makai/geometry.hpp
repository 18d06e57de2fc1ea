#pragma once

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace makai {

/// Points and normals live in R^3; planar bodies use z = 0 throughout.
using Vec3 = Eigen::Vector3d;

class GeometryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Closed halfspace {x : normal . x <= offset}; normal is unit length.
struct Halfspace {
  Vec3 normal = Vec3::Zero();
  double offset = 0.0;
};

/// Non-degenerate simplex with dim+1 vertices (dim 1, 2 or 3).
struct Simplex {
  int dim = 2;
  std::array<Vec3, 4> v{};
  double volume() const;  // unsigned dim-volume
  Vec3 centroid() const;
};

/// Convex bounded full-dimensional polytope in dimension 2 or 3 with both
/// representations and facet->vertex incidence.  Immutable after
/// construction; all queries are const.
class Polytope {
public:
  /// Convex hull of the given points.  Throws GeometryError when the points
  /// do not span the requested dimension.
  static Polytope from_vertices(int dim, const std::vector<Vec3>& points);

  /// Intersection of halfspaces.  Throws GeometryError when unbounded or not
  /// full-dimensional.  Redundant constraints are removed.
  static Polytope from_halfspaces(int dim, const std::vector<Halfspace>& hs);

  int dimension() const { return dim_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  const std::vector<Vec3>& vertices() const { return vertices_; }

  /// Vertex indices of each facet, cyclically ordered (2D: the two edge
  /// endpoints oriented counterclockwise; 3D: polygon order).
  const std::vector<std::vector<int>>& facet_vertices() const {
    return incidence_;
  }

  /// Circumradius about the vertex centroid; used to scale tolerances.
  double scale() const { return scale_; }
  double tolerance() const { return 1e-9 * std::max(1.0, scale_); }

  /// min_i (b_i - a_i . x); negative outside the body.
  double signed_margin(const Vec3& x) const;

  /// Distance to the boundary for interior points, clamped to 0 outside.
  double distance(const Vec3& x) const;

  bool contains(const Vec3& x, double tol) const;
  bool contains(const Vec3& x) const { return contains(x, tolerance()); }

  struct InradiusResult {
    double r = 0.0;
    Vec3 center = Vec3::Zero();
  };
  /// Chebyshev center: solves max r s.t. a_i . x + r <= b_i.
  InradiusResult inradius() const;

  double volume() const;
  double diameter() const;

  /// Fan triangulation from the Chebyshev center over the facets (3D facets
  /// are fanned from their first vertex).  Simplex volumes sum to volume().
  std::vector<Simplex> triangulate() const;

  /// Image under x -> s x (s > 0).
  Polytope scaled_about_origin(double s) const;

private:
  Polytope() = default;
  static Polytope build_from_halfspaces(int dim, std::vector<Halfspace> hs,
                                        bool assume_bounded);
  friend std::vector<struct FacetCell> facet_partition(const Polytope&);

  int dim_ = 2;
  std::vector<Halfspace> facets_;
  std::vector<Vec3> vertices_;
  std::vector<std::vector<int>> incidence_;
  double scale_ = 1.0;
};

/// One cell of the nearest-facet partition: the subset of the body on which
/// the base facet is the nearest part of the boundary.  Convex by
/// construction (parent constraints plus dominance constraints).
struct FacetCell {
  int facet_index = 0;
  Halfspace base;  // hyperplane of the base facet
  Polytope cell;
};

/// Nearest-facet partition: one cell per facet, covering the body up to a
/// null set.  Dominance constraints are (a_i - a_j).x <= b_i - b_j.
std::vector<FacetCell> facet_partition(const Polytope& P);

/// Height of the cell over a point y in the relative interior of its base
/// facet: f_i(y) = max{t >= 0 : y - t a_i in cell}.  Throws when y violates
/// the relative-interior precondition (margin 1e-9 at unit scale).
double cell_height(const FacetCell& cell, const Vec3& y);

// --- stock bodies ------------------------------------------------------

Polytope make_box(int dim, const Vec3& lo, const Vec3& hi);
Polytope make_regular_ngon(int n, double circumradius);
Polytope make_simplex3d();
/// Slab box (-L/2, L/2)^{dim-1} x (0,1).
Polytope make_slab(int dim, double L);

} // namespace makai
