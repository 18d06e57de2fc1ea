#include "makai/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace makai {

namespace {

double orient(const Vec2& a, const Vec2& b, const Vec2& c) {
  return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

// strict in-circumcircle test for CCW triangle (a,b,c)
bool in_circle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& p) {
  const long double adx = a.x() - p.x(), ady = a.y() - p.y();
  const long double bdx = b.x() - p.x(), bdy = b.y() - p.y();
  const long double cdx = c.x() - p.x(), cdy = c.y() - p.y();
  const long double ad = adx * adx + ady * ady;
  const long double bd = bdx * bdx + bdy * bdy;
  const long double cd = cdx * cdx + cdy * cdy;
  const long double det = adx * (bdy * cd - bd * cdy) -
                          ady * (bdx * cd - bd * cdx) +
                          ad * (bdx * cdy - bdy * cdx);
  const long double mag = (std::abs(adx) + std::abs(ady)) *
                          (std::abs(bdx) + std::abs(bdy)) *
                          (std::abs(cdx) + std::abs(cdy));
  return det > 1e-14L * (mag + 1e-300L);
}

double dist2_point_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  const Vec2 e = b - a;
  const double L2 = e.squaredNorm();
  double t = L2 > 0.0 ? e.dot(p - a) / L2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return (a + t * e - p).squaredNorm();
}

bool segments_cross(const Vec2& a, const Vec2& b, const Vec2& c,
                    const Vec2& d) {
  const double d1 = orient(c, d, a), d2 = orient(c, d, b);
  const double d3 = orient(a, b, c), d4 = orient(a, b, d);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

Vec2 circumcenter_of(const Vec2& a, const Vec2& b, const Vec2& c) {
  const Vec2 ab = b - a, ac = c - a;
  const double d = 2.0 * (ab.x() * ac.y() - ab.y() * ac.x());
  const double ab2 = ab.squaredNorm(), ac2 = ac.squaredNorm();
  return a +
         Vec2(ac.y() * ab2 - ab.y() * ac2, ab.x() * ac2 - ac.x() * ab2) / d;
}

// --- incremental Delaunay (Bowyer-Watson with visibility repair) ----------

class Delaunay {
public:
  struct Tri {
    int v[3];
    int adj[3];  // adj[k]: neighbor across the edge opposite v[k]
    bool alive = true;
  };

  std::vector<Vec2> pts;
  std::vector<Tri> tris;
  std::vector<int> vhint;

  Delaunay(const Vec2& lo, const Vec2& hi) {
    const Vec2 c = 0.5 * (lo + hi);
    const double R = 10.0 * ((hi - lo).norm() + 1.0);
    pts.push_back(c + R * Vec2(0.0, 2.0));
    pts.push_back(c + R * Vec2(-1.7320508075688772, -1.0));
    pts.push_back(c + R * Vec2(1.7320508075688772, -1.0));
    tris.push_back(Tri{{0, 1, 2}, {-1, -1, -1}, true});
    vhint = {0, 0, 0};
    snap_tol_ = 1e-13 * R;
  }

  // Inserts p; returns its vertex id (an existing id when p coincides with a
  // present vertex).  Appends created triangle ids to `created` if given.
  int insert(const Vec2& p, std::vector<int>* created = nullptr) {
    const int t0 = locate(p);
    for (int k = 0; k < 3; ++k) {
      const int v = tris[t0].v[k];
      if ((pts[v] - p).norm() <= snap_tol_) return v;
    }

    cavity_.clear();
    in_cavity_.clear();
    cavity_.push_back(t0);
    in_cavity_.insert(t0);
    for (size_t head = 0; head < cavity_.size(); ++head) {
      const int t = cavity_[head];
      for (int k = 0; k < 3; ++k) {
        const int n = tris[t].adj[k];
        if (n < 0 || in_cavity_.count(n)) continue;
        const Tri& nt = tris[n];
        if (in_circle(pts[nt.v[0]], pts[nt.v[1]], pts[nt.v[2]], p)) {
          cavity_.push_back(n);
          in_cavity_.insert(n);
        }
      }
    }
    // visibility repair: every cavity boundary edge must strictly face p
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < cavity_.size() && !changed; ++i) {
        const int t = cavity_[i];
        for (int k = 0; k < 3; ++k) {
          const int n = tris[t].adj[k];
          if (n >= 0 && in_cavity_.count(n)) continue;
          const Vec2& a = pts[tris[t].v[(k + 1) % 3]];
          const Vec2& b = pts[tris[t].v[(k + 2) % 3]];
          if (orient(a, b, p) <= 0.0) {
            if (n < 0) throw MeshError("mesh: cavity hit the outer hull");
            cavity_.push_back(n);
            in_cavity_.insert(n);
            changed = true;
            break;
          }
        }
      }
    }

    const int pid = static_cast<int>(pts.size());
    pts.push_back(p);
    vhint.push_back(-1);

    boundary_.clear();
    for (int t : cavity_) {
      for (int k = 0; k < 3; ++k) {
        const int n = tris[t].adj[k];
        if (n >= 0 && in_cavity_.count(n)) continue;
        boundary_.push_back(
            {tris[t].v[(k + 1) % 3], tris[t].v[(k + 2) % 3], n});
      }
    }
    for (int t : cavity_) tris[t].alive = false;

    ring_.clear();
    for (const auto& e : boundary_) {
      const int id = static_cast<int>(tris.size());
      tris.push_back(Tri{{pid, e.a, e.b}, {e.outer, -1, -1}, true});
      if (e.outer >= 0) {
        Tri& out = tris[e.outer];
        for (int k = 0; k < 3; ++k) {
          if (out.v[(k + 1) % 3] == e.b && out.v[(k + 2) % 3] == e.a) {
            out.adj[k] = id;
            break;
          }
        }
      }
      ring_[e.a] = id;
      if (created) created->push_back(id);
    }
    for (const auto& e : boundary_) {
      const int t = ring_[e.a];
      const int n = ring_[e.b];
      tris[t].adj[1] = n;  // edge (p, b)
      tris[n].adj[2] = t;  // edge (p, a) of the next ring triangle
    }
    vhint[pid] = ring_.begin()->second;
    for (const auto& e : boundary_) {
      vhint[e.a] = ring_[e.a];
      vhint[e.b] = ring_[e.a];
    }
    last_ = vhint[pid];
    return pid;
  }

  // triangle with directed edge a->b, or -1
  int tri_with_edge(int a, int b) const {
    int t = vhint[a];
    if (t < 0 || !tris[t].alive) return slow_tri_with_edge(a, b);
    const int start = t;
    int guard = 0;
    while (guard++ < 100000) {
      const int i = local_index(t, a);
      if (i < 0) return slow_tri_with_edge(a, b);
      if (tris[t].v[(i + 1) % 3] == b) return t;
      const int next = tris[t].adj[(i + 2) % 3];
      if (next == start) return -1;  // full turn, edge absent
      if (next < 0 || !tris[next].alive) return slow_tri_with_edge(a, b);
      t = next;
    }
    return -1;
  }

  bool edge_exists(int a, int b) const {
    return tri_with_edge(a, b) >= 0 || tri_with_edge(b, a) >= 0;
  }

private:
  struct BEdge {
    int a, b, outer;
  };

  int local_index(int t, int v) const {
    for (int k = 0; k < 3; ++k)
      if (tris[t].v[k] == v) return k;
    return -1;
  }

  int slow_tri_with_edge(int a, int b) const {
    for (int t = static_cast<int>(tris.size()) - 1; t >= 0; --t) {
      if (!tris[t].alive) continue;
      for (int k = 0; k < 3; ++k)
        if (tris[t].v[k] == a && tris[t].v[(k + 1) % 3] == b) return t;
    }
    return -1;
  }

  int locate(const Vec2& p) const {
    int t = last_;
    if (t < 0 || static_cast<size_t>(t) >= tris.size() || !tris[t].alive) {
      t = -1;
      for (int i = static_cast<int>(tris.size()) - 1; i >= 0; --i)
        if (tris[i].alive) {
          t = i;
          break;
        }
    }
    int guard = 0;
    const int cap = static_cast<int>(tris.size()) + 16;
    while (guard++ < cap) {
      bool moved = false;
      for (int k = 0; k < 3; ++k) {
        const Vec2& a = pts[tris[t].v[(k + 1) % 3]];
        const Vec2& b = pts[tris[t].v[(k + 2) % 3]];
        if (orient(a, b, p) < 0.0) {
          const int n = tris[t].adj[k];
          if (n < 0) break;
          t = n;
          moved = true;
          break;
        }
      }
      if (!moved) {
        last_ = t;
        return t;
      }
    }
    for (int i = static_cast<int>(tris.size()) - 1; i >= 0; --i) {
      if (!tris[i].alive) continue;
      bool ok = true;
      for (int k = 0; k < 3 && ok; ++k) {
        const Vec2& a = pts[tris[i].v[(k + 1) % 3]];
        const Vec2& b = pts[tris[i].v[(k + 2) % 3]];
        if (orient(a, b, p) < -1e-12) ok = false;
      }
      if (ok) {
        last_ = i;
        return i;
      }
    }
    throw MeshError("mesh: point location failed");
  }

  mutable int last_ = 0;
  double snap_tol_;
  std::vector<int> cavity_;
  std::unordered_set<int> in_cavity_;
  std::vector<BEdge> boundary_;
  std::map<int, int> ring_;
};

// --- even-odd point-in-domain with row-binned loop edges -------------------

class LoopTester {
public:
  explicit LoopTester(const std::vector<std::vector<Vec2>>& loops) {
    double ylo = 1e300, yhi = -1e300;
    int edges = 0;
    for (const auto& L : loops) {
      edges += static_cast<int>(L.size());
      for (const auto& p : L) {
        ylo = std::min(ylo, p.y());
        yhi = std::max(yhi, p.y());
      }
    }
    ylo_ = ylo - 1e-9;
    rows_ = std::max(1, edges / 4);
    dy_ = (yhi - ylo + 2e-9) / rows_;
    bins_.resize(rows_);
    for (const auto& L : loops) {
      const int n = static_cast<int>(L.size());
      for (int i = 0; i < n; ++i) {
        const Vec2& a = L[i];
        const Vec2& b = L[(i + 1) % n];
        int r0 = row(std::min(a.y(), b.y()));
        int r1 = row(std::max(a.y(), b.y()));
        r0 = std::clamp(r0, 0, rows_ - 1);
        r1 = std::clamp(r1, 0, rows_ - 1);
        for (int r = r0; r <= r1; ++r) bins_[r].emplace_back(a, b);
      }
    }
  }

  bool inside(const Vec2& p) const {
    const int r = row(p.y());
    if (r < 0 || r >= rows_) return false;
    int crossings = 0;
    for (const auto& e : bins_[r]) {
      const bool up1 = e.first.y() > p.y(), up2 = e.second.y() > p.y();
      if (up1 == up2) continue;
      const double xi = e.first.x() + (p.y() - e.first.y()) /
                                          (e.second.y() - e.first.y()) *
                                          (e.second.x() - e.first.x());
      if (xi > p.x()) ++crossings;
    }
    return crossings % 2 == 1;
  }

private:
  int row(double y) const {
    return static_cast<int>(std::floor((y - ylo_) / dy_));
  }
  double ylo_ = 0, dy_ = 1;
  int rows_ = 1;
  std::vector<std::vector<std::pair<Vec2, Vec2>>> bins_;
};

// --- segment store with a midpoint grid ------------------------------------

std::uint64_t seg_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

struct SegmentStore {
  struct Info {
    int a, b, origin;
  };
  std::unordered_map<std::uint64_t, Info> segs;
  double cell = 1.0;
  Vec2 lo = Vec2::Zero();
  std::unordered_map<std::int64_t, std::vector<std::uint64_t>> grid;

  std::int64_t cell_key(const Vec2& p) const {
    const auto ix =
        static_cast<std::int64_t>(std::floor((p.x() - lo.x()) / cell));
    const auto iy =
        static_cast<std::int64_t>(std::floor((p.y() - lo.y()) / cell));
    return (ix << 20) ^ iy;
  }

  void add(int a, int b, int origin, const std::vector<Vec2>& pts) {
    const auto key = seg_key(a, b);
    segs[key] = Info{a, b, origin};
    grid[cell_key(0.5 * (pts[a] + pts[b]))].push_back(key);
  }
  void remove(int a, int b) { segs.erase(seg_key(a, b)); }

  template <typename F>
  void for_candidates_near(const Vec2& p, F&& f) const {
    const auto ix =
        static_cast<std::int64_t>(std::floor((p.x() - lo.x()) / cell));
    const auto iy =
        static_cast<std::int64_t>(std::floor((p.y() - lo.y()) / cell));
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        const auto it = grid.find(((ix + dx) << 20) ^ (iy + dy));
        if (it == grid.end()) continue;
        for (const auto key : it->second) {
          const auto sit = segs.find(key);
          if (sit != segs.end()) f(sit->second);
        }
      }
    }
  }
};

} // namespace

// --- TriangleMesh -----------------------------------------------------------

int TriangleMesh::free_count() const {
  int n = 0;
  for (bool f : fixed_)
    if (!f) ++n;
  return n;
}

double TriangleMesh::area() const {
  double a = 0.0;
  for (const auto& t : tris_)
    a += 0.5 * std::abs(orient(nodes_[t[0]], nodes_[t[1]], nodes_[t[2]]));
  return a;
}

double TriangleMesh::min_angle_deg() const {
  double worst = 180.0;
  for (const auto& t : tris_) {
    for (int k = 0; k < 3; ++k) {
      const Vec2 u = nodes_[t[(k + 1) % 3]] - nodes_[t[k]];
      const Vec2 v = nodes_[t[(k + 2) % 3]] - nodes_[t[k]];
      const double ang =
          std::atan2(std::abs(u.x() * v.y() - u.y() * v.x()), u.dot(v));
      worst = std::min(worst, ang * 180.0 / M_PI);
    }
  }
  return worst;
}

void TriangleMesh::validate() const {
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& t : tris_) {
    if (orient(nodes_[t[0]], nodes_[t[1]], nodes_[t[2]]) <= 0.0)
      throw MeshError("mesh: non-positive triangle orientation");
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      ++edge_count[{a, b}];
    }
  }
  for (const auto& [e, c] : edge_count) {
    if (c > 2) throw MeshError("mesh: edge shared by more than two triangles");
    if (c == 1 && !(fixed_[e.first] && fixed_[e.second]))
      throw MeshError("mesh: boundary edge with free endpoint");
  }
  if (min_angle_deg() < 15.0)
    throw MeshError("mesh: minimum angle below 15 degrees");
}

TriangleMesh TriangleMesh::refine_uniform() const {
  TriangleMesh out;
  out.nodes_ = nodes_;
  out.fixed_ = fixed_;

  std::map<std::pair<int, int>, int> edge_tris;
  for (const auto& t : tris_) {
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      ++edge_tris[{a, b}];
    }
  }
  std::map<std::pair<int, int>, int> midpoint;
  auto mid_of = [&](int a, int b) {
    int u = a, v = b;
    if (u > v) std::swap(u, v);
    const auto it = midpoint.find({u, v});
    if (it != midpoint.end()) return it->second;
    const int id = static_cast<int>(out.nodes_.size());
    out.nodes_.push_back(0.5 * (nodes_[u] + nodes_[v]));
    out.fixed_.push_back(edge_tris[{u, v}] == 1);  // boundary or seam edge
    midpoint[{u, v}] = id;
    return id;
  };
  for (const auto& t : tris_) {
    const int m01 = mid_of(t[0], t[1]);
    const int m12 = mid_of(t[1], t[2]);
    const int m20 = mid_of(t[2], t[0]);
    out.tris_.push_back({t[0], m01, m20});
    out.tris_.push_back({t[1], m12, m01});
    out.tris_.push_back({t[2], m20, m12});
    out.tris_.push_back({m01, m12, m20});
  }

  // seams: fixed nodes sharing exact coordinates pair up
  std::map<std::pair<double, double>, std::vector<int>> coord;
  for (int v = 0; v < out.node_count(); ++v)
    if (out.fixed_[v])
      coord[{out.nodes_[v].x(), out.nodes_[v].y()}].push_back(v);
  for (const auto& [c, ids] : coord)
    if (ids.size() == 2) out.seams_.emplace_back(ids[0], ids[1]);
  return out;
}

void TriangleMesh::export_text(std::ostream& os) const {
  os << "nodes " << nodes_.size() << "\n";
  os.precision(17);
  for (int v = 0; v < node_count(); ++v)
    os << nodes_[v].x() << " " << nodes_[v].y() << " " << (fixed_[v] ? 1 : 0)
       << "\n";
  os << "elements " << tris_.size() << "\n";
  for (const auto& t : tris_) os << t[0] << " " << t[1] << " " << t[2] << "\n";
}

// --- mesher -----------------------------------------------------------------

TriangleMesh mesh_polygon(const PolygonDomain& domain, double h,
                          const MeshOptions& opts) {
  if (!(h > 0.0)) throw MeshError("mesh_polygon: h must be positive");
  if (domain.outer.size() < 3) throw MeshError("mesh_polygon: empty polygon");

  std::vector<std::vector<Vec2>> loops;
  loops.push_back(domain.outer);
  for (const auto& hole : domain.holes) loops.push_back(hole);

  // simplicity: no proper crossings among loop edges and slits
  std::vector<std::pair<Vec2, Vec2>> all_edges;
  for (const auto& L : loops)
    for (size_t i = 0; i < L.size(); ++i)
      all_edges.emplace_back(L[i], L[(i + 1) % L.size()]);
  for (const auto& s : domain.slits) all_edges.emplace_back(s.first, s.second);
  for (size_t i = 0; i < all_edges.size(); ++i)
    for (size_t j = i + 1; j < all_edges.size(); ++j)
      if (segments_cross(all_edges[i].first, all_edges[i].second,
                         all_edges[j].first, all_edges[j].second))
        throw MeshError("mesh_polygon: self-intersecting input");

  Vec2 lo(1e300, 1e300), hi(-1e300, -1e300);
  for (const auto& L : loops) {
    for (const auto& p : L) {
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
  }

  Delaunay dt(lo, hi);
  SegmentStore store;
  store.cell = 2.0 * h;
  store.lo = lo - Vec2(4.0 * h, 4.0 * h);

  const int slit_origin0 = static_cast<int>(loops.size());
  auto add_chain = [&](const std::vector<Vec2>& chain, bool closed,
                       int origin) {
    std::vector<int> ids;
    const size_t n = chain.size();
    for (size_t i = 0; i < n; ++i) ids.push_back(dt.insert(chain[i]));
    const size_t last = closed ? n : n - 1;
    for (size_t i = 0; i < last; ++i) {
      const Vec2 a = chain[i], b = chain[(i + 1) % n];
      const int pieces =
          std::max(1, static_cast<int>(std::ceil((b - a).norm() / h)));
      int prev = ids[i];
      for (int k = 1; k <= pieces; ++k) {
        const int cur =
            k == pieces
                ? ids[(i + 1) % n]
                : dt.insert(a + (b - a) * (static_cast<double>(k) / pieces));
        store.add(prev, cur, origin, dt.pts);
        prev = cur;
      }
    }
  };
  for (size_t li = 0; li < loops.size(); ++li)
    add_chain(loops[li], true, static_cast<int>(li));
  for (size_t si = 0; si < domain.slits.size(); ++si)
    add_chain({domain.slits[si].first, domain.slits[si].second}, false,
              slit_origin0 + static_cast<int>(si));

  LoopTester tester(loops);

  // interior seeds on a hex grid, kept clear of all PSLG segments
  {
    const double row_h = h * 0.8660254037844386;
    int row = 0;
    for (double y = lo.y() + 0.5 * row_h; y < hi.y(); y += row_h, ++row) {
      const double x0 = lo.x() + (row % 2 == 0 ? 0.5 * h : h);
      for (double x = x0; x < hi.x(); x += h) {
        const Vec2 p(x, y);
        if (!tester.inside(p)) continue;
        bool clear = true;
        store.for_candidates_near(p, [&](const SegmentStore::Info& s) {
          if (clear &&
              dist2_point_segment(dt.pts[s.a], dt.pts[s.b], p) < 0.5 * h * h)
            clear = false;
        });
        if (clear) dt.insert(p);
      }
    }
  }

  // conformity and refinement machinery
  auto apex_encroaches = [&](int a, int b) -> bool {
    const Vec2 m = 0.5 * (dt.pts[a] + dt.pts[b]);
    const double r2 = (dt.pts[b] - dt.pts[a]).squaredNorm() * 0.25;
    for (int dir = 0; dir < 2; ++dir) {
      const int t = dir == 0 ? dt.tri_with_edge(a, b) : dt.tri_with_edge(b, a);
      if (t < 0) continue;
      for (int k = 0; k < 3; ++k) {
        const int v = dt.tris[t].v[k];
        if (v == a || v == b) continue;
        if ((dt.pts[v] - m).squaredNorm() < r2 * (1.0 - 1e-12)) return true;
      }
    }
    return false;
  };

  std::deque<std::uint64_t> squeue;
  std::deque<int> tqueue;
  std::vector<int> created;

  auto split_segment = [&](int a, int b, int origin) {
    const Vec2 m = 0.5 * (dt.pts[a] + dt.pts[b]);
    store.remove(a, b);
    created.clear();
    const int vm = dt.insert(m, &created);
    for (int t : created) tqueue.push_back(t);
    store.add(a, vm, origin, dt.pts);
    store.add(vm, b, origin, dt.pts);
    squeue.push_back(seg_key(a, vm));
    squeue.push_back(seg_key(vm, b));
    // the midpoint may encroach nearby segments
    store.for_candidates_near(m, [&](const SegmentStore::Info& s) {
      if (s.a == vm || s.b == vm) return;
      const Vec2 sm = 0.5 * (dt.pts[s.a] + dt.pts[s.b]);
      const double r2 = (dt.pts[s.b] - dt.pts[s.a]).squaredNorm() * 0.25;
      if ((m - sm).squaredNorm() < r2 * (1.0 - 1e-12))
        squeue.push_back(seg_key(s.a, s.b));
    });
  };

  auto process_segments = [&]() {
    while (!squeue.empty()) {
      const auto key = squeue.front();
      squeue.pop_front();
      const auto it = store.segs.find(key);
      if (it == store.segs.end()) continue;
      const auto info = it->second;
      if (static_cast<int>(dt.pts.size()) > opts.max_nodes)
        throw MeshError("mesh_polygon: refinement did not terminate");
      if (!dt.edge_exists(info.a, info.b) || apex_encroaches(info.a, info.b))
        split_segment(info.a, info.b, info.origin);
    }
  };

  for (const auto& [key, info] : store.segs) squeue.push_back(key);
  process_segments();

  // Ruppert loop: split bad or oversized triangles inside the domain
  const double ratio_bound =
      1.0 / (2.0 * std::sin(opts.min_angle_deg * M_PI / 180.0));
  auto tri_inside = [&](int t) -> bool {
    const auto& tt = dt.tris[t];
    if (tt.v[0] < 3 || tt.v[1] < 3 || tt.v[2] < 3) return false;
    return tester.inside(
        (dt.pts[tt.v[0]] + dt.pts[tt.v[1]] + dt.pts[tt.v[2]]) / 3.0);
  };
  auto tri_bad = [&](int t) -> bool {
    const auto& tt = dt.tris[t];
    const Vec2 &a = dt.pts[tt.v[0]], &b = dt.pts[tt.v[1]], &c = dt.pts[tt.v[2]];
    const Vec2 cc = circumcenter_of(a, b, c);
    const double cr = (cc - a).norm();
    if (cr > h) return true;
    const double se =
        std::min({(b - a).norm(), (c - b).norm(), (a - c).norm()});
    return cr > ratio_bound * se;
  };

  for (int t = 0; t < static_cast<int>(dt.tris.size()); ++t)
    if (dt.tris[t].alive && tri_inside(t) && tri_bad(t)) tqueue.push_back(t);

  std::unordered_set<int> unfixable;
  while (!tqueue.empty()) {
    const int t = tqueue.front();
    tqueue.pop_front();
    if (t >= static_cast<int>(dt.tris.size()) || !dt.tris[t].alive) continue;
    if (unfixable.count(t)) continue;
    if (!tri_inside(t) || !tri_bad(t)) continue;
    if (static_cast<int>(dt.pts.size()) > opts.max_nodes)
      throw MeshError("mesh_polygon: refinement did not terminate");

    const auto& tt = dt.tris[t];
    const Vec2 cc = circumcenter_of(dt.pts[tt.v[0]], dt.pts[tt.v[1]],
                                    dt.pts[tt.v[2]]);
    // a circumcenter that encroaches segments is replaced by their splits
    std::vector<std::uint64_t> hit;
    store.for_candidates_near(cc, [&](const SegmentStore::Info& s) {
      const Vec2 sm = 0.5 * (dt.pts[s.a] + dt.pts[s.b]);
      const double r2 = (dt.pts[s.b] - dt.pts[s.a]).squaredNorm() * 0.25;
      if ((cc - sm).squaredNorm() < r2 * (1.0 - 1e-12))
        hit.push_back(seg_key(s.a, s.b));
    });
    if (!hit.empty()) {
      for (const auto key : hit) {
        const auto it = store.segs.find(key);
        if (it != store.segs.end())
          split_segment(it->second.a, it->second.b, it->second.origin);
      }
      process_segments();
      tqueue.push_back(t);
      continue;
    }
    if (!tester.inside(cc)) {
      unfixable.insert(t);  // non-encroaching exterior circumcenter
      continue;
    }
    created.clear();
    const int vid = dt.insert(cc, &created);
    if (created.empty()) {
      unfixable.insert(t);  // snapped onto an existing vertex
      continue;
    }
    (void)vid;
    for (int nt : created) tqueue.push_back(nt);
    process_segments();
  }

  // carve and compact
  TriangleMesh mesh;
  std::vector<int> newid(dt.pts.size(), -1);
  std::vector<std::array<int, 3>> kept;
  for (int t = 0; t < static_cast<int>(dt.tris.size()); ++t) {
    if (!dt.tris[t].alive || !tri_inside(t)) continue;
    std::array<int, 3> tri{dt.tris[t].v[0], dt.tris[t].v[1], dt.tris[t].v[2]};
    if (orient(dt.pts[tri[0]], dt.pts[tri[1]], dt.pts[tri[2]]) < 0.0)
      std::swap(tri[1], tri[2]);
    kept.push_back(tri);
  }
  if (kept.empty()) throw MeshError("mesh_polygon: empty mesh after carving");
  for (auto& tri : kept) {
    for (int& v : tri) {
      if (newid[v] < 0) {
        newid[v] = static_cast<int>(mesh.nodes_.size());
        mesh.nodes_.push_back(dt.pts[v]);
        mesh.fixed_.push_back(false);
      }
      v = newid[v];
    }
  }
  for (const auto& [key, info] : store.segs) {
    for (int v : {info.a, info.b})
      if (newid[v] >= 0) mesh.fixed_[newid[v]] = true;
  }

  // seams: duplicate slit-interior nodes; triangles right of the slit
  // direction reference the duplicates
  for (size_t si = 0; si < domain.slits.size(); ++si) {
    const int origin = slit_origin0 + static_cast<int>(si);
    const Vec2 A = domain.slits[si].first;
    const Vec2 dir = (domain.slits[si].second - A).normalized();
    std::set<int> chain_old;
    for (const auto& [key, info] : store.segs) {
      if (info.origin != origin) continue;
      chain_old.insert(info.a);
      chain_old.insert(info.b);
    }
    std::vector<std::pair<double, int>> byparam;
    for (int v : chain_old)
      byparam.emplace_back(dir.dot(dt.pts[v] - A), v);
    std::sort(byparam.begin(), byparam.end());
    std::unordered_map<int, int> dup;
    for (size_t k = 1; k + 1 < byparam.size(); ++k) {
      const int nv = newid[byparam[k].second];
      if (nv < 0) continue;
      const int d = static_cast<int>(mesh.nodes_.size());
      mesh.nodes_.push_back(mesh.nodes_[nv]);
      mesh.fixed_.push_back(true);
      dup[nv] = d;
      mesh.seams_.emplace_back(nv, d);
    }
    if (dup.empty()) continue;
    for (auto& tri : kept) {
      const Vec2 cen =
          (mesh.nodes_[tri[0]] + mesh.nodes_[tri[1]] + mesh.nodes_[tri[2]]) /
          3.0;
      const Vec2 r = cen - A;
      if (dir.x() * r.y() - dir.y() * r.x() < 0.0) {
        for (int& v : tri) {
          const auto it = dup.find(v);
          if (it != dup.end()) v = it->second;
        }
      }
    }
  }

  mesh.tris_ = std::move(kept);
  return mesh;
}

TriangleMesh mesh_polygon(const std::vector<Vec2>& polygon, double h,
                          const std::vector<std::pair<Vec2, Vec2>>& slits,
                          const MeshOptions& opts) {
  PolygonDomain d;
  d.outer = polygon;
  d.slits = slits;
  return mesh_polygon(d, h, opts);
}

} // namespace makai
