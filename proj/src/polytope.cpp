#include "fano/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fano {

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

}  // namespace

FanoPolytope FanoPolytope::validate(int dim, const std::vector<IVec>& points) {
  if (dim < 1) throw validation_error("bad-dimension", "dimension must be positive");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw validation_error("bad-dimension", "point dimension mismatch");

  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw validation_error("duplicate-point",
                               "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  if (points.size() < static_cast<std::size_t>(dim) + 1)
    throw validation_error("too-few-points", "need at least dim+1 points");

  Hull hull;
  try {
    hull = hull_scan(dim, points);
  } catch (const error& e) {
    std::string what = e.what();
    if (what == "not full-dimensional")
      throw validation_error("not-full-dimensional", what);
    throw validation_error("origin-not-interior", what);
  }

  // every input point must be a hull vertex
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::binary_search(hull.vertices.begin(), hull.vertices.end(), static_cast<int>(i)))
      throw validation_error("redundant-point",
                             "point " + std::to_string(i) + " is not a vertex of the hull");
  }

  for (const auto& f : hull.facets)
    if (f.corners.size() != static_cast<std::size_t>(dim))
      throw validation_error("non-simplicial-facet",
                             "a facet has " + std::to_string(f.corners.size()) + " vertices");

  FanoPolytope p;
  p.dim_ = dim;
  p.verts_ = points;
  for (const auto& f : hull.facets) {
    if (f.level != 1)
      throw validation_error("non-unimodular-facet", "facet hyperplane not at level 1");
    IntMatrix basis = IntMatrix::from_columns([&] {
      std::vector<IVec> cols;
      for (int v : f.corners) cols.push_back(points[v]);
      return cols;
    }());
    Int d = det(basis);
    if (d != 1 && d != -1)
      throw validation_error("non-unimodular-facet",
                             "facet vertex matrix has determinant " + d.str());
    Facet facet;
    facet.verts = f.corners;
    std::sort(facet.verts.begin(), facet.verts.end());
    facet.normal = f.normal;
    facet.basis_inverse = inverse_unimodular(basis);
    p.facets_.push_back(std::move(facet));
  }

  // edges
  std::set<std::pair<int, int>> edges;
  for (const auto& f : p.facets_)
    for (std::size_t a = 0; a < f.verts.size(); ++a)
      for (std::size_t b = a + 1; b < f.verts.size(); ++b)
        edges.insert({f.verts[a], f.verts[b]});
  p.edges_.assign(edges.begin(), edges.end());

  p.fvec_ = ::fano::f_vector(p);

  // primitive collections by increasing size, lexicographic within a size
  const int n = p.size();
  for (int k = 2; k <= dim + 1; ++k) {
    for (auto& s : subsets_of_size(n, k)) {
      if (p.is_face(s)) continue;
      bool minimal = true;
      for (int skip = 0; skip < k && minimal; ++skip) {
        std::vector<int> sub;
        for (int i = 0; i < k; ++i)
          if (i != skip) sub.push_back(s[i]);
        if (!p.is_face(sub)) minimal = false;
      }
      if (!minimal) continue;
      IVec sum(dim, Int(0));
      for (int v : s) sum = add(sum, p.verts_[v]);
      auto [support, coeffs] = p.locate(sum);
      PrimitiveRelation r;
      r.collection = s;
      r.support = support;
      r.coeffs = coeffs;
      r.degree = Int(k);
      for (const auto& c : coeffs) r.degree -= c;
      if (r.degree < 1)
        throw validation_error("nonpositive-degree",
                               "primitive relation with degree " + r.degree.str() +
                                   " contradicts ampleness of a Fano polytope");
      p.relations_.push_back(std::move(r));
    }
  }
  return p;
}

bool FanoPolytope::is_face(std::vector<int> s) const {
  std::sort(s.begin(), s.end());
  for (int v : s)
    if (v < 0 || v >= size()) throw error("is_face: vertex index out of range");
  for (const auto& f : facets_)
    if (std::includes(f.verts.begin(), f.verts.end(), s.begin(), s.end())) return true;
  return false;
}

bool FanoPolytope::is_edge(int i, int j) const {
  if (i == j) return false;
  auto e = std::minmax(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(e.first, e.second));
}

int FanoPolytope::valence(int i) const {
  if (i < 0 || i >= size()) throw error("valence: vertex index out of range");
  int cnt = 0;
  for (const auto& [a, b] : edges_)
    if (a == i || b == i) ++cnt;
  return cnt;
}

std::pair<std::vector<int>, IVec> FanoPolytope::locate(const IVec& point) const {
  if (static_cast<int>(point.size()) != dim_) throw dimension_error("locate: dimension mismatch");
  if (is_zero(point)) return {{}, {}};
  std::optional<std::set<int>> positive_support;
  std::vector<int> support;
  IVec coeffs;
  for (const auto& f : facets_) {
    IVec lambda = f.basis_inverse.apply(point);
    bool nonneg = true;
    for (const auto& l : lambda)
      if (l < 0) { nonneg = false; break; }
    if (!nonneg) continue;
    std::set<int> pos;
    for (std::size_t i = 0; i < lambda.size(); ++i)
      if (lambda[i] > 0) pos.insert(f.verts[i]);
    if (!positive_support) {
      positive_support = pos;
      for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] > 0) {
          support.push_back(f.verts[i]);
          coeffs.push_back(lambda[i]);
        }
    } else if (pos != *positive_support) {
      throw error("locate: containing facets disagree on the minimal cone (internal)");
    }
  }
  if (!positive_support) throw error("locate: point not covered by the fan (internal)");
  // sort support ascending, coeffs along
  std::vector<std::size_t> ord(support.size());
  for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
  std::sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
  std::vector<int> s2(support.size());
  IVec c2(coeffs.size());
  for (std::size_t i = 0; i < ord.size(); ++i) { s2[i] = support[ord[i]]; c2[i] = coeffs[ord[i]]; }
  return {std::move(s2), std::move(c2)};
}

IVec FanoPolytope::relation_vector(const PrimitiveRelation& r) const {
  IVec v(size(), Int(0));
  for (int i : r.collection) v[i] += 1;
  for (std::size_t k = 0; k < r.support.size(); ++k) v[r.support[k]] -= r.coeffs[k];
  return v;
}

Hull facets(int dim, const std::vector<IVec>& pts) {
  if (pts.size() < static_cast<std::size_t>(dim) + 1) throw error("too few points");
  return hull_scan(dim, pts);
}

FVector f_vector(const FanoPolytope& p) {
  std::set<std::vector<int>> faces;
  for (const auto& f : p.facets()) {
    const auto& vs = f.verts;
    const int m = static_cast<int>(vs.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < m; ++i)
        if (mask & (1 << i)) sub.push_back(vs[i]);
      faces.insert(sub);
    }
  }
  FVector fv;
  fv.f.assign(p.dim(), Int(0));
  for (const auto& s : faces) fv.f[s.size() - 1] += 1;
  return fv;
}

bool is_reflexive(int dim, const std::vector<IVec>& pts) {
  Hull h = hull_scan(dim, pts);  // throws if 0 is not interior
  for (const auto& f : h.facets)
    if (f.level != 1) return false;
  auto q = RationalPolytope::from_lattice_points(dim, pts);
  auto interior = interior_lattice_points(q);
  return interior.size() == 1 && is_zero(interior[0]);
}

RationalPolytope RationalPolytope::from_lattice_points(int dim, const std::vector<IVec>& pts) {
  RationalPolytope q;
  q.dim = dim;
  Hull h;
  try {
    h = hull_scan(dim, pts);
  } catch (const error& e) {
    if (std::string(e.what()) == "not full-dimensional") {
      q.degenerate = true;
      return q;
    }
    throw;
  }
  // reindex hull vertices 0..m-1
  std::map<int, int> remap;
  for (int v : h.vertices) {
    remap[v] = static_cast<int>(q.verts.size());
    RVec rv(dim);
    for (int j = 0; j < dim; ++j) rv[j] = Rat(pts[v][j]);
    q.verts.push_back(std::move(rv));
  }
  for (const auto& f : h.facets) q.ineqs.push_back({f.normal, Rat(f.level)});
  q.faces.assign(dim, {});
  for (const auto& f : h.facets) {
    std::vector<int> c;
    for (int v : f.corners) c.push_back(remap[v]);
    if (dim >= 2) {
      // edges of this facet
      if (dim == 2) {
        std::vector<int> sorted = c;
        std::sort(sorted.begin(), sorted.end());
        q.faces[1].push_back(sorted);
      } else {
        for (std::size_t i = 0; i < c.size(); ++i) {
          int u = c[i], v = c[(i + 1) % c.size()];
          std::vector<int> e{std::min(u, v), std::max(u, v)};
          q.faces[1].push_back(e);
        }
        std::vector<int> sorted = c;
        std::sort(sorted.begin(), sorted.end());
        q.faces[2].push_back(sorted);
      }
    }
  }
  for (std::size_t i = 0; i < q.verts.size(); ++i) q.faces[0].push_back({static_cast<int>(i)});
  // dedupe edges
  if (dim >= 2) {
    std::sort(q.faces[1].begin(), q.faces[1].end());
    q.faces[1].erase(std::unique(q.faces[1].begin(), q.faces[1].end()), q.faces[1].end());
  }
  return q;
}

RationalPolytope dual_polytope(const FanoPolytope& p) {
  const int d = p.dim();
  RationalPolytope q;
  q.dim = d;
  for (const auto& f : p.facets()) {
    RVec v(d);
    for (int j = 0; j < d; ++j) v[j] = Rat(f.normal[j]);
    q.verts.push_back(std::move(v));
  }
  for (const auto& v : p.vertices()) q.ineqs.push_back({v, Rat(1)});

  // Polarity: k-faces of the dual correspond to (d-1-k)-faces of p; the dual
  // face of G collects the facets of p containing G.
  std::set<std::vector<int>> pfaces;
  for (const auto& f : p.facets()) {
    const auto& vs = f.verts;
    const int m = static_cast<int>(vs.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < m; ++i)
        if (mask & (1 << i)) sub.push_back(vs[i]);
      pfaces.insert(sub);
    }
  }
  q.faces.assign(d, {});
  for (const auto& g : pfaces) {
    int k = d - static_cast<int>(g.size());  // dual face dimension
    if (k < 0 || k >= d) continue;
    std::vector<int> dual_face;
    for (std::size_t fi = 0; fi < p.facets().size(); ++fi) {
      const auto& fv = p.facets()[fi].verts;
      if (std::includes(fv.begin(), fv.end(), g.begin(), g.end()))
        dual_face.push_back(static_cast<int>(fi));
    }
    q.faces[k].push_back(std::move(dual_face));
  }
  return q;
}

std::vector<IVec> lattice_points(const RationalPolytope& q) {
  if (q.degenerate) throw error("lattice_points: degenerate polytope");
  if (q.verts.empty()) throw error("lattice_points: unbounded or empty polytope");
  const int d = q.dim;
  IVec lo(d), hi(d);
  for (int j = 0; j < d; ++j) {
    Rat mn = q.verts[0][j], mx = q.verts[0][j];
    for (const auto& v : q.verts) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = rat_ceil(mn);
    hi[j] = rat_floor(mx);
  }
  std::vector<IVec> out;
  IVec x = lo;
  while (true) {
    bool inside = true;
    for (const auto& ineq : q.ineqs) {
      Rat s = 0;
      for (int j = 0; j < d; ++j) s += Rat(ineq.normal[j]) * Rat(x[j]);
      if (s > ineq.level) { inside = false; break; }
    }
    if (inside) out.push_back(x);
    int j = d - 1;
    while (j >= 0 && x[j] == hi[j]) { x[j] = lo[j]; --j; }
    if (j < 0) break;
    x[j] += 1;
  }
  return out;
}

std::vector<IVec> interior_lattice_points(const RationalPolytope& q) {
  auto all = lattice_points(q);
  std::vector<IVec> out;
  for (const auto& x : all) {
    bool strict = true;
    for (const auto& ineq : q.ineqs) {
      Rat s = 0;
      for (int j = 0; j < q.dim; ++j) s += Rat(ineq.normal[j]) * Rat(x[j]);
      if (s == ineq.level) { strict = false; break; }
    }
    if (strict) out.push_back(x);
  }
  return out;
}

namespace {

Rat rational_det(std::vector<RVec> m) {
  const std::size_t n = m.size();
  Rat d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) { std::swap(m[p], m[k]); d = -d; }
    d *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return d;
}

// Pulling triangulation of a face of the rational polytope, recursing through
// the stored face lattice. Returns vertex index simplices.
void pull_triangulate(const RationalPolytope& q, const std::vector<int>& face, int face_dim,
                      std::vector<std::vector<int>>& out, std::vector<int>& prefix) {
  if (face.size() == static_cast<std::size_t>(face_dim) + 1) {
    std::vector<int> simplex = prefix;
    simplex.insert(simplex.end(), face.begin(), face.end());
    out.push_back(std::move(simplex));
    return;
  }
  int v0 = *std::min_element(face.begin(), face.end());
  prefix.push_back(v0);
  for (const auto& sub : q.faces.at(face_dim - 1)) {
    if (std::find(sub.begin(), sub.end(), v0) != sub.end()) continue;
    std::vector<int> sorted_sub = sub, sorted_face = face;
    std::sort(sorted_sub.begin(), sorted_sub.end());
    std::sort(sorted_face.begin(), sorted_face.end());
    if (!std::includes(sorted_face.begin(), sorted_face.end(), sorted_sub.begin(), sorted_sub.end()))
      continue;
    pull_triangulate(q, sub, face_dim - 1, out, prefix);
  }
  prefix.pop_back();
}

}  // namespace

Rat volume(const RationalPolytope& q) {
  if (q.degenerate) return 0;
  if (q.faces.empty()) throw error("volume: face lattice missing");
  const int d = q.dim;
  std::vector<std::vector<int>> simplices;
  std::vector<int> prefix;
  for (const auto& facet : q.faces.at(d - 1))
    pull_triangulate(q, facet, d - 1, simplices, prefix);
  Rat vol = 0;
  Rat dfact = 1;
  for (int i = 2; i <= d; ++i) dfact *= i;
  for (const auto& s : simplices) {
    std::vector<RVec> m;
    for (int v : s) m.push_back(q.verts[v]);
    Rat dt = rational_det(m);
    vol += boost::multiprecision::abs(dt);
  }
  return vol / dfact;
}

}  // namespace fano
