#include "fano/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace fano {

int default_box(int dim) {
  switch (dim) {
    case 1: return 1;
    case 2: return 2;
    case 3: return 3;
    default: throw dimension_error("enumerate_fano: supported for dimensions 1..3 only");
  }
}

namespace {

// The search runs on int64 coordinates. With |x| <= box <= 8 every 3x3
// determinant and side product stays far below the int64 range.
using P3 = std::array<std::int64_t, 3>;

struct SmallFacet {
  P3 normal;
  std::int64_t level;
  std::vector<int> corners;  // cyclic for polygons
  std::vector<int> incident;
};

struct SmallHull {
  std::vector<SmallFacet> facets;
  std::vector<bool> is_corner;
  std::set<std::pair<int, int>> edges;
  bool zero_interior = false;
  bool all_points_vertices = false;
};

std::int64_t dot3(const P3& a, const P3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// 2-d convex polygon of coplanar points, via monotone chain on a projection
// axis pair where the polygon stays two-dimensional
std::vector<int> polygon_order(const std::vector<P3>& pts, const std::vector<int>& incident,
                               const P3& normal) {
  int ax = 0, ay = 1;
  if (normal[2] == 0) {
    if (normal[1] != 0) { ax = 0; ay = 2; }
    else { ax = 1; ay = 2; }
  }
  std::vector<int> idx = incident;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (pts[a][ax] != pts[b][ax]) return pts[a][ax] < pts[b][ax];
    return pts[a][ay] < pts[b][ay];
  });
  auto cross = [&](int o, int a, int b) {
    return (pts[a][ax] - pts[o][ax]) * (pts[b][ay] - pts[o][ay]) -
           (pts[a][ay] - pts[o][ay]) * (pts[b][ax] - pts[o][ax]);
  };
  std::vector<int> hull;
  for (int stage = 0; stage < 2; ++stage) {
    std::size_t start = hull.size();
    auto scan = [&](int p) {
      while (hull.size() >= start + 2 &&
             cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
        hull.pop_back();
      hull.push_back(p);
    };
    if (stage == 0)
      for (int p : idx) scan(p);
    else
      for (auto it = idx.rbegin(); it != idx.rend(); ++it) scan(*it);
    hull.pop_back();  // endpoint repeats at the next stage
  }
  return hull;
}

SmallHull small_hull(int dim, const std::vector<P3>& pts) {
  const int n = static_cast<int>(pts.size());
  SmallHull out;
  std::map<std::vector<int>, std::pair<P3, std::int64_t>> by_incidence;

  auto consider = [&](P3 normal, std::int64_t level) {
    int side_lo = 0, side_hi = 0;
    std::vector<int> incident;
    for (int p = 0; p < n; ++p) {
      std::int64_t s = dot3(normal, pts[p]) - level;
      if (s < 0) ++side_lo;
      else if (s > 0) ++side_hi;
      else incident.push_back(p);
      if (side_lo && side_hi) return;
    }
    if (side_hi) {  // flip outward
      for (auto& x : normal) x = -x;
      level = -level;
    }
    by_incidence.emplace(std::move(incident), std::make_pair(normal, level));
  };

  if (dim == 1) {
    int lo = 0, hi = 0;
    for (int p = 1; p < n; ++p) {
      if (pts[p][0] < pts[lo][0]) lo = p;
      if (pts[p][0] > pts[hi][0]) hi = p;
    }
    consider({1, 0, 0}, pts[hi][0]);
    consider({-1, 0, 0}, -pts[lo][0]);
  } else if (dim == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::int64_t dx = pts[j][0] - pts[i][0], dy = pts[j][1] - pts[i][1];
        if (dx == 0 && dy == 0) continue;
        P3 normal{-dy, dx, 0};
        consider(normal, dot3(normal, pts[i]));
      }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          P3 u{pts[j][0] - pts[i][0], pts[j][1] - pts[i][1], pts[j][2] - pts[i][2]};
          P3 v{pts[k][0] - pts[i][0], pts[k][1] - pts[i][1], pts[k][2] - pts[i][2]};
          P3 normal{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                    u[0] * v[1] - u[1] * v[0]};
          if (normal[0] == 0 && normal[1] == 0 && normal[2] == 0) continue;
          consider(normal, dot3(normal, pts[i]));
        }
  }

  out.is_corner.assign(n, false);
  out.zero_interior = !by_incidence.empty();
  for (auto& [incident, nf] : by_incidence) {
    SmallFacet f;
    f.normal = nf.first;
    f.level = nf.second;
    f.incident = incident;
    if (nf.second <= 0) out.zero_interior = false;
    if (dim == 1) {
      f.corners = incident;
    } else if (dim == 2) {
      // endpoints along the segment
      int ax = (f.normal[0] == 0) ? 0 : 1;
      auto mm = std::minmax_element(incident.begin(), incident.end(), [&](int a, int b) {
        return pts[a][ax] < pts[b][ax];
      });
      f.corners = {*mm.first, *mm.second};
      if (f.corners[0] == f.corners[1]) f.corners.pop_back();
    } else {
      f.corners = static_cast<int>(incident.size()) == 3 ? incident
                                                         : polygon_order(pts, incident, f.normal);
    }
    for (int c : f.corners) out.is_corner[c] = true;
    if (dim == 2) {
      if (f.corners.size() == 2)
        out.edges.insert({std::min(f.corners[0], f.corners[1]),
                          std::max(f.corners[0], f.corners[1])});
    } else if (dim == 3) {
      for (std::size_t a = 0; a < f.corners.size(); ++a) {
        int x = f.corners[a], y = f.corners[(a + 1) % f.corners.size()];
        out.edges.insert({std::min(x, y), std::max(x, y)});
      }
    }
    out.facets.push_back(std::move(f));
  }
  out.all_points_vertices =
      std::all_of(out.is_corner.begin(), out.is_corner.end(), [](bool b) { return b; });
  return out;
}

std::int64_t det3(const std::vector<P3>& pts, const std::vector<int>& c, int dim) {
  if (dim == 1) return pts[c[0]][0];
  if (dim == 2)
    return pts[c[0]][0] * pts[c[1]][1] - pts[c[0]][1] * pts[c[1]][0];
  const P3 &a = pts[c[0]], &b = pts[c[1]], &cc = pts[c[2]];
  return a[0] * (b[1] * cc[2] - b[2] * cc[1]) - a[1] * (b[0] * cc[2] - b[2] * cc[0]) +
         a[2] * (b[0] * cc[1] - b[1] * cc[0]);
}

struct Searcher {
  int dim, box, max_vertices;
  std::vector<P3> candidates;                  // lex sorted
  std::map<P3, int> candidate_index;
  std::set<std::string> seen;                  // canonical digests
  std::vector<CanonicalForm> found;
  std::mutex* sink_mutex = nullptr;            // guards seen+found in parallel runs

  void emit(const std::vector<P3>& pts) {
    std::vector<IVec> verts;
    for (const auto& p : pts) {
      IVec v(dim);
      for (int t = 0; t < dim; ++t) v[t] = p[t];
      verts.push_back(std::move(v));
    }
    FanoPolytope fp = [&] {
      try {
        return FanoPolytope::validate(dim, verts);
      } catch (const validation_error&) {
        throw error("enumerate: emission candidate failed exact validation (internal)");
      }
    }();
    CanonicalForm cf = canonical_form(fp);
    if (sink_mutex) {
      std::lock_guard<std::mutex> lk(*sink_mutex);
      if (seen.insert(cf.digest).second) found.push_back(std::move(cf));
    } else {
      if (seen.insert(cf.digest).second) found.push_back(std::move(cf));
    }
  }

  // pts = basis + chosen candidates; last = index of last chosen candidate
  void search(std::vector<P3>& pts, int last) {
    SmallHull hull = small_hull(dim, pts);
    if (!hull.all_points_vertices) return;

    // two-element collection law against the final polytope: a non-edge pair
    // must sum to 0, to a chosen point, or to a still-choosable candidate
    std::set<P3> current(pts.begin(), pts.end());
    const int n = static_cast<int>(pts.size());
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (dim == 1) continue;
        if (hull.edges.count({a, b})) continue;
        P3 s{pts[a][0] + pts[b][0], pts[a][1] + pts[b][1], pts[a][2] + pts[b][2]};
        if (s == P3{0, 0, 0}) continue;
        if (current.count(s)) continue;
        auto it = candidate_index.find(s);
        if (it == candidate_index.end() || it->second <= last) return;  // dead branch
      }

    // plausible Fano polytope at this node?
    if (hull.zero_interior) {
      bool simplicial_unimodular = true;
      for (const auto& f : hull.facets) {
        if (static_cast<int>(f.corners.size()) != dim ||
            static_cast<int>(f.incident.size()) != dim) {
          simplicial_unimodular = false;
          break;
        }
        std::int64_t dt = det3(pts, f.corners, dim);
        if (dt != 1 && dt != -1) { simplicial_unimodular = false; break; }
      }
      if (simplicial_unimodular) emit(pts);
    }

    if (n >= max_vertices) return;
    for (int next = last + 1; next < static_cast<int>(candidates.size()); ++next) {
      const P3& w = candidates[next];
      // w must lie strictly outside the current hull, or it can never be a vertex
      bool outside = false;
      for (const auto& f : hull.facets)
        if (dot3(f.normal, w) > f.level) { outside = true; break; }
      if (!outside) continue;
      pts.push_back(w);
      search(pts, next);
      pts.pop_back();
    }
  }
};

std::vector<P3> build_candidates(int dim, int box) {
  std::vector<P3> out;
  P3 x{0, 0, 0};
  std::function<void(int)> rec = [&](int t) {
    if (t == dim) {
      std::int64_t g = 0;
      std::int64_t sum = 0;
      for (int i = 0; i < dim; ++i) {
        g = std::gcd(g, x[i] < 0 ? -x[i] : x[i]);
        sum += x[i];
      }
      if (g == 1 && sum <= 0) out.push_back(x);
      return;
    }
    for (std::int64_t v = -box; v <= box; ++v) {
      x[t] = v;
      rec(t + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<CanonicalForm> enumerate_fano(const EnumConfig& cfg) {
  const int dim = cfg.dim;
  if (dim < 1 || dim > 3) throw dimension_error("enumerate_fano: supported for dimensions 1..3 only");
  const int box = cfg.box > 0 ? cfg.box : default_box(dim);
  if (box > 8) throw error("enumerate_fano: box larger than the exact int64 bound");
  const int max_vertices = cfg.max_vertices > 0 ? cfg.max_vertices : 2 * ((1 << dim) - 1);
  const int jobs = std::max(1, cfg.jobs);

  auto candidates = build_candidates(dim, box);
  std::vector<P3> basis;
  for (int i = 0; i < dim; ++i) {
    P3 e{0, 0, 0};
    e[i] = 1;
    basis.push_back(e);
  }

  std::set<std::string> seen;
  std::vector<CanonicalForm> found;
  std::mutex sink;

  auto run_range = [&](int worker) {
    Searcher s;
    s.dim = dim;
    s.box = box;
    s.max_vertices = max_vertices;
    s.candidates = candidates;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      s.candidate_index[candidates[i]] = static_cast<int>(i);
    for (std::size_t first = worker; first < candidates.size(); first += jobs) {
      std::vector<P3> pts = basis;
      pts.push_back(candidates[first]);
      s.search(pts, static_cast<int>(first));
    }
    std::lock_guard<std::mutex> lk(sink);
    for (auto& cf : s.found)
      if (seen.insert(cf.digest).second) found.push_back(std::move(cf));
  };

  if (jobs == 1) {
    run_range(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(run_range, w);
    for (auto& t : pool) t.join();
  }

  std::sort(found.begin(), found.end());
  return found;
}

BoundaryAudit boundary_audit(const std::vector<CanonicalForm>& classes, int box) {
  BoundaryAudit audit;
  audit.max_abs = 0;
  for (const auto& cf : classes) {
    std::vector<IVec> verts;
    for (std::size_t j = 0; j < cf.matrix.cols(); ++j) verts.push_back(cf.matrix.col(j));
    FanoPolytope p = FanoPolytope::validate(static_cast<int>(cf.matrix.rows()), verts);
    Int m = max_frame_coordinate(p);
    if (m > audit.max_abs) audit.max_abs = m;
  }
  audit.pass = audit.max_abs < box;
  return audit;
}

}  // namespace fano
