#include "fano/hull.hpp"

#include "fano/linalg.hpp"
#include "fano/simplex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fano {

namespace {

// Cramer solve A x = ones, returned as (numerators, denominator).
// denominator is det(A); caller skips the subset when it is zero.
std::pair<IVec, Int> solve_ones(const IntMatrix& a) {
  const std::size_t n = a.rows();
  Int d = det(a);
  if (d == 0) return {IVec{}, Int(0)};
  IVec num(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix m = a;
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = 1;
    num[j] = det(m);
  }
  return {std::move(num), std::move(d)};
}

// Extreme points of a low-dimensional point set (no interiority assumption).
std::vector<int> extreme_points(const std::vector<IVec>& pts, const std::vector<int>& idx) {
  std::vector<int> out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    std::vector<IVec> others;
    others.reserve(idx.size() - 1);
    for (std::size_t l = 0; l < idx.size(); ++l)
      if (l != k) others.push_back(pts[idx[l]]);
    if (!convex_member(pts[idx[k]], others)) out.push_back(idx[k]);
  }
  return out;
}

// Cyclic order of planar points (any ambient dim; caller guarantees rank-2
// affine span). Sorts around the centroid by angle, exactly.
std::vector<int> cyclic_order(const std::vector<IVec>& pts, std::vector<int> corners) {
  const std::size_t m = corners.size();
  if (m <= 3) return corners;
  const std::size_t dim = pts[corners[0]].size();
  // scaled offsets m*p - sum(corners): integral, centroid-relative
  IVec sum(dim, Int(0));
  for (int c : corners) sum = add(sum, pts[c]);
  std::vector<IVec> rel(m);
  for (std::size_t k = 0; k < m; ++k) {
    rel[k].resize(dim);
    for (std::size_t j = 0; j < dim; ++j) rel[k][j] = Int(m) * pts[corners[k]][j] - sum[j];
  }
  // planar coordinates: project to the two axes where the polygon spans
  // (use the first relative vector and one independent of it via cross sign)
  // Simpler: pick two coordinate axes on which the projected polygon is
  // still 2-dimensional, by trying pairs until a nonzero area shows up.
  std::size_t ax = 0, ay = 1;
  bool found = false;
  for (std::size_t a = 0; a < dim && !found; ++a)
    for (std::size_t b = a + 1; b < dim && !found; ++b) {
      for (std::size_t k = 1; k < m; ++k) {
        Int cr = rel[0][a] * rel[k][b] - rel[0][b] * rel[k][a];
        if (cr != 0) { ax = a; ay = b; found = true; break; }
      }
    }
  if (!found) throw error("cyclic_order: degenerate polygon");
  auto half = [&](std::size_t k) {
    const Int& x = rel[k][ax];
    const Int& y = rel[k][ay];
    return (y < 0 || (y == 0 && x < 0)) ? 1 : 0;
  };
  std::vector<std::size_t> ord(m);
  for (std::size_t k = 0; k < m; ++k) ord[k] = k;
  std::sort(ord.begin(), ord.end(), [&](std::size_t i, std::size_t j) {
    int hi = half(i), hj = half(j);
    if (hi != hj) return hi < hj;
    Int cr = rel[i][ax] * rel[j][ay] - rel[i][ay] * rel[j][ax];
    if (cr != 0) return cr > 0;
    return corners[i] < corners[j];
  });
  std::vector<int> out(m);
  for (std::size_t k = 0; k < m; ++k) out[k] = corners[ord[k]];
  return out;
}

}  // namespace

Hull hull_scan(int dim, const std::vector<IVec>& pts) {
  const std::size_t n = pts.size();
  if (dim < 1) throw dimension_error("hull_scan: dimension must be positive");
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != dim) throw dimension_error("hull_scan: point dimension mismatch");
  if (n < static_cast<std::size_t>(dim) + 1) throw error("too few points");

  Hull hull;
  hull.dim = dim;

  if (dim == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    if (!(pts[lo][0] < 0 && pts[hi][0] > 0)) throw error("origin not interior");
    HullFacet fmax{{Int(1)}, pts[hi][0], {static_cast<int>(hi)}, {static_cast<int>(hi)}};
    HullFacet fmin{{Int(-1)}, -pts[lo][0], {static_cast<int>(lo)}, {static_cast<int>(lo)}};
    hull.facets = {fmax, fmin};
    hull.vertices = {static_cast<int>(std::min(lo, hi)), static_cast<int>(std::max(lo, hi))};
    return hull;
  }

  bool full_dim = false;
  std::map<std::vector<int>, HullFacet> by_incidence;

  std::vector<int> subset(dim);
  for (int i = 0; i < dim; ++i) subset[i] = i;
  auto advance = [&]() {
    int k = dim - 1;
    while (k >= 0 && subset[k] == static_cast<int>(n) - dim + k) --k;
    if (k < 0) return false;
    ++subset[k];
    for (int j = k + 1; j < dim; ++j) subset[j] = subset[j - 1] + 1;
    return true;
  };

  do {
    IntMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) a.at(i, j) = pts[subset[i]][j];
    auto [num, den] = solve_ones(a);
    if (den == 0) continue;
    full_dim = true;
    // u = num/den satisfies <u, p> = 1 on the subset
    if (den < 0) {
      den = -den;
      for (auto& x : num) x = -x;
    }
    bool all_le = true, all_ge = true;
    std::vector<int> incident;
    for (std::size_t p = 0; p < n; ++p) {
      Int s = dot(num, pts[p]);  // compare s/den with 1
      if (s < den) all_ge = false;
      else if (s > den) all_le = false;
      else incident.push_back(static_cast<int>(p));
      if (!all_le && !all_ge) break;
    }
    if (!all_le && !all_ge) continue;
    if (all_ge && !all_le) throw error("origin not interior");
    if (by_incidence.count(incident)) continue;
    Int g = gcd_all(num);
    IVec normal(num.size());
    for (std::size_t j = 0; j < num.size(); ++j) normal[j] = num[j] / g;
    if (den % g != 0) throw error("hull_scan: non-integral level (internal)");
    HullFacet f;
    f.normal = std::move(normal);
    f.level = den / g;
    f.incident = incident;
    by_incidence.emplace(std::move(incident), std::move(f));
  } while (advance());

  if (!full_dim) throw error("not full-dimensional");
  if (by_incidence.empty()) throw error("origin not interior");

  std::set<int> verts;
  for (auto& [key, f] : by_incidence) {
    if (f.incident.size() == static_cast<std::size_t>(dim)) {
      f.corners = f.incident;
    } else {
      f.corners = extreme_points(pts, f.incident);
      if (dim == 3) f.corners = cyclic_order(pts, f.corners);
    }
    verts.insert(f.corners.begin(), f.corners.end());
    hull.facets.push_back(f);
  }
  hull.vertices.assign(verts.begin(), verts.end());

  // Closure is checkable except for merged facets in dim >= 4; validate_fano
  // rejects those separately as non-simplicial.
  bool checkable = hull.dim <= 3;
  if (!checkable) {
    checkable = true;
    for (const auto& f : hull.facets)
      if (f.corners.size() != static_cast<std::size_t>(dim)) { checkable = false; break; }
  }
  if (checkable && !hull_closed(hull)) throw error("origin not interior");
  return hull;
}

bool hull_closed(const Hull& h) {
  if (h.dim == 1) return h.facets.size() == 2;
  std::map<std::vector<int>, int> ridge_count;
  for (const auto& f : h.facets) {
    const auto& c = f.corners;
    if (h.dim == 2) {
      // facets are segments; ridges are their endpoints
      for (int v : c) ridge_count[{v}]++;
    } else if (f.corners.size() == static_cast<std::size_t>(h.dim)) {
      // simplicial facet: ridges are all (dim-1)-subsets
      for (std::size_t skip = 0; skip < c.size(); ++skip) {
        std::vector<int> r;
        for (std::size_t i = 0; i < c.size(); ++i)
          if (i != skip) r.push_back(c[i]);
        std::sort(r.begin(), r.end());
        ridge_count[r]++;
      }
    } else if (h.dim == 3) {
      // polygon facet: ridges are consecutive corner pairs
      for (std::size_t i = 0; i < c.size(); ++i) {
        int u = c[i], v = c[(i + 1) % c.size()];
        std::vector<int> r{std::min(u, v), std::max(u, v)};
        ridge_count[r]++;
      }
    } else {
      return false;  // merged facets in dim >= 4 are outside this check's scope
    }
  }
  for (const auto& [r, cnt] : ridge_count)
    if (cnt != 2) return false;
  return !ridge_count.empty();
}

}  // namespace fano
