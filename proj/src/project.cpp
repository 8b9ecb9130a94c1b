#include "fano/project.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fano {

Projection project(const FanoPolytope& p, int i) {
  if (i < 0 || i >= p.size()) throw error("project: vertex index out of range");
  const int d = p.dim();
  Projection pr;
  pr.base = i;
  pr.quotient = quotient_projection(p.vertex(i));

  pr.images.resize(p.size());
  std::map<IVec, std::vector<int>> groups;
  for (int j = 0; j < p.size(); ++j) {
    pr.images[j] = pr.quotient.apply(p.vertex(j));
    if (j != i) groups[pr.images[j]].push_back(j);
  }
  if (!is_zero(pr.images[i])) throw error("project: quotient does not kill the base (internal)");

  for (int j = 0; j < p.size(); ++j) {
    if (j == i) continue;
    const auto& g = groups[pr.images[j]];
    if (g.front() == j) pr.distinct_points.push_back(pr.images[j]);
  }
  pr.hull = hull_scan(d - 1, pr.distinct_points);

  for (const auto& [pt, g] : groups) {
    if (g.size() > 2)
      throw error("project: three vertices share an image (violates facet unimodularity)");
    if (g.size() != 2 || is_zero(pt)) continue;
    int j = g[0], k = g[1];
    // exactly one of v_i + v_k = v_j and v_i + v_j = v_k is a primitive relation
    auto is_rel = [&](int a, int b, int c) {
      for (const auto& r : p.relations()) {
        if (r.collection == std::vector<int>{std::min(a, b), std::max(a, b)} &&
            r.support == std::vector<int>{c} && r.coeffs.size() == 1 && r.coeffs[0] == 1)
          return true;
      }
      return false;
    };
    bool jk = is_rel(i, k, j);  // v_i + v_k = v_j: v_j is the link of v_k
    bool kj = is_rel(i, j, k);  // v_i + v_j = v_k: v_k is the link of v_j
    if (jk == kj) throw error("project: double point does not resolve to exactly one relation");
    DoublePoint dp;
    dp.point = pt;
    dp.pre_j = j;
    dp.pre_k = k;
    dp.link = jk ? j : k;
    dp.base = jk ? k : j;
    pr.double_points.push_back(std::move(dp));
  }
  std::sort(pr.double_points.begin(), pr.double_points.end(),
            [](const DoublePoint& a, const DoublePoint& b) { return a.point < b.point; });
  return pr;
}

bool check_reflexive_projection(const FanoPolytope& p, int i) {
  Projection pr = project(p, i);
  return is_reflexive(p.dim() - 1, pr.distinct_points);
}

DivisorFanoCheck divisor_fano_check(const FanoPolytope& p, int i) {
  DivisorFanoCheck out;
  for (const auto& r : p.relations()) {
    if (!std::binary_search(r.collection.begin(), r.collection.end(), i)) continue;
    if (!out.min_collection_degree || r.degree < *out.min_collection_degree)
      out.min_collection_degree = r.degree;
  }
  Projection pr = project(p, i);
  try {
    FanoPolytope::validate(p.dim() - 1, pr.pi_vertices());
    out.projected_is_fano = true;
  } catch (const validation_error&) {
    out.projected_is_fano = false;
  }
  return out;
}

const char* to_string(FaceType t) {
  switch (t) {
    case FaceType::F1: return "F1";
    case FaceType::F2: return "F2";
    case FaceType::F3: return "F3";
    default: return "F4";
  }
}

namespace {

// lattice content of the parallelogram spanned by (b - a, c - a): 1 iff the
// triangle a b c is unimodular in its plane
bool unimodular_triangle(const IVec& a, const IVec& b, const IVec& c) {
  IntMatrix m = IntMatrix::from_rows({sub(b, a), sub(c, a)});
  auto s = snf(m);
  return s.s.at(0, 0) == 1 && s.s.at(1, 1) == 1;
}

}  // namespace

FaceType classify_2face(const std::vector<IVec>& pts) {
  if (pts.size() == 3) {
    if (unimodular_triangle(pts[0], pts[1], pts[2])) return FaceType::F1;
    throw error("not a Prop 3.1 face");
  }
  if (pts.size() != 4) throw error("not a Prop 3.1 face");
  const std::size_t dim = pts[0].size();
  IVec total(dim, Int(0));
  for (const auto& p : pts) total = add(total, p);

  // F2: p1 + p2 + p3 = 3 p4 <=> total = 4 p4
  for (std::size_t s = 0; s < 4; ++s) {
    IVec scaled(dim);
    for (std::size_t j = 0; j < dim; ++j) scaled[j] = 4 * pts[s][j];
    if (scaled == total) return FaceType::F2;
  }
  // F3: p1 + p2 = 2 p3
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      for (std::size_t m = 0; m < 4; ++m) {
        if (m == a || m == b) continue;
        IVec twice(dim);
        for (std::size_t j = 0; j < dim; ++j) twice[j] = 2 * pts[m][j];
        if (add(pts[a], pts[b]) == twice) return FaceType::F3;
      }
  // F4: p1 + p2 = p3 + p4 with a unimodular parallelogram
  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& q : pairings) {
    if (add(pts[q[0]], pts[q[1]]) == add(pts[q[2]], pts[q[3]])) {
      // corners in order q0, q2, q1, q3: edges q2-q0 and q2-q1
      if (unimodular_triangle(pts[q[2]], pts[q[0]], pts[q[1]])) return FaceType::F4;
    }
  }
  throw error("not a Prop 3.1 face");
}

ProjectionFaceReport classify_projection_faces(const FanoPolytope& p, const Projection& proj) {
  auto q = RationalPolytope::from_lattice_points(3, proj.distinct_points);
  return classify_projection_faces(p, proj, lattice_points(q));
}

ProjectionFaceReport classify_projection_faces(const FanoPolytope& p, const Projection& proj,
                                               const std::vector<IVec>& pi_lattice_points) {
  if (p.dim() != 4) throw dimension_error("classify_projection_faces: requires a 4-dim polytope");
  ProjectionFaceReport rep;
  for (const auto& f : proj.hull.facets) {
    std::vector<IVec> on_face;
    for (const auto& x : pi_lattice_points)
      if (dot(f.normal, x) == f.level) on_face.push_back(x);
    FaceType t = classify_2face(on_face);
    rep.facet_types.push_back(t);
    if (t == FaceType::F4) ++rep.f4_count;
  }
  return rep;
}

bool f3_formula_check(const FanoPolytope& p, int i, int j) {
  if (p.dim() != 4) throw dimension_error("f3_formula_check: requires a 4-dim polytope");
  bool antipodal = false;
  for (const auto& r : p.relations())
    if (r.collection == std::vector<int>{std::min(i, j), std::max(i, j)} && r.support.empty())
      antipodal = true;
  if (!antipodal) throw error("f3_formula_check: vertices are not an antipodal pair");

  Projection pr = project(p, i);
  auto faces = classify_projection_faces(p, pr);

  // edges of P_i from its facet polygons
  std::set<std::pair<int, int>> edges;
  for (const auto& f : pr.hull.facets) {
    const auto& c = f.corners;
    for (std::size_t a = 0; a < c.size(); ++a) {
      int u = c[a], v = c[(a + 1) % c.size()];
      edges.insert({std::min(u, v), std::max(u, v)});
    }
  }
  auto valence_of = [&](int vertex_idx) {
    int cnt = 0;
    for (const auto& [a, b] : edges)
      if (a == vertex_idx || b == vertex_idx) ++cnt;
    return cnt;
  };

  Int gamma_sum = 0;
  for (const auto& dp : pr.double_points) {
    // locate the double point among the hull vertices of P_i
    int idx = -1;
    for (std::size_t k = 0; k < pr.distinct_points.size(); ++k)
      if (pr.distinct_points[k] == dp.point) { idx = static_cast<int>(k); break; }
    if (idx < 0) throw error("f3_formula_check: double point lost (internal)");
    if (!std::binary_search(pr.hull.vertices.begin(), pr.hull.vertices.end(), idx))
      continue;  // non-vertex double points carry no valence
    gamma_sum += valence_of(idx);
  }

  Int alpha = p.valence(i);
  Int lhs = p.f_vector()[3];
  Int rhs = 4 * alpha + faces.f4_count - 8 + gamma_sum;
  return lhs == rhs;
}

}  // namespace fano
