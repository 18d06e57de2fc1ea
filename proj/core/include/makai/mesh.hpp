#pragma once

#include <Eigen/Dense>

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

namespace makai {

using Vec2 = Eigen::Vector2d;

class MeshError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Conforming triangle mesh of a planar domain.  Boundary and slit nodes are
/// fixed (homogeneous Dirichlet); slits are meshed as seams with duplicated
/// nodes so fields may jump across them.
class TriangleMesh {
public:
  const std::vector<Vec2>& nodes() const { return nodes_; }
  const std::vector<std::array<int, 3>>& triangles() const { return tris_; }
  const std::vector<bool>& fixed() const { return fixed_; }
  const std::vector<std::pair<int, int>>& seam_pairs() const {
    return seams_;
  }

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int triangle_count() const { return static_cast<int>(tris_.size()); }
  int free_count() const;

  double area() const;
  double min_angle_deg() const;

  /// Conformity: every edge borders one or two triangles, positive
  /// orientation, fixed flags on single-triangle edges.  Throws MeshError.
  void validate() const;

  /// 1 -> 4 midpoint refinement; boundary/seam midpoints stay fixed and node
  /// positions are not re-projected, so the refined FE space nests.
  TriangleMesh refine_uniform() const;

  /// Text export: "nodes N" then one "x y fixed" line per node,
  /// "elements M" then one "a b c" line per element.
  void export_text(std::ostream& os) const;

  friend TriangleMesh mesh_polygon(const struct PolygonDomain&, double,
                                   const struct MeshOptions&);

private:
  std::vector<Vec2> nodes_;
  std::vector<std::array<int, 3>> tris_;
  std::vector<bool> fixed_;
  std::vector<std::pair<int, int>> seams_;
};

/// Planar straight-line domain: one outer loop, optional hole loops, optional
/// slit segments (polyline cracks meshed as seams).
struct PolygonDomain {
  std::vector<Vec2> outer;
  std::vector<std::vector<Vec2>> holes;
  std::vector<std::pair<Vec2, Vec2>> slits;
};

struct MeshOptions {
  double min_angle_deg = 22.0;  // refinement target; resulting mesh >= 15
  int max_nodes = 3'000'000;
};

/// Delaunay-refinement mesh with target edge length h (honored within a
/// factor of 2).  Deterministic for identical input.  Throws MeshError for
/// self-intersecting input or refinement overflow.
TriangleMesh mesh_polygon(const PolygonDomain& domain, double h,
                          const MeshOptions& opts = {});

/// Convenience overload: simple polygon with optional slits.
TriangleMesh mesh_polygon(const std::vector<Vec2>& polygon, double h,
                          const std::vector<std::pair<Vec2, Vec2>>& slits = {},
                          const MeshOptions& opts = {});

} // namespace makai
