#include "fano/relations.hpp"

#include "fano/simplex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fano {

std::vector<std::vector<int>> primitive_collections(const FanoPolytope& p) {
  std::vector<std::vector<int>> out;
  for (const auto& r : p.relations()) out.push_back(r.collection);
  return out;
}

RelationLattice relation_lattice(const FanoPolytope& p) {
  IntMatrix vm = IntMatrix::from_columns(p.vertices());  // d x n
  RelationLattice rl;
  rl.basis = kernel_basis(vm);
  const std::size_t r = rl.basis.rows();
  if (r != p.vertices().size() - p.dim())
    throw error("relation_lattice: kernel rank mismatch (internal)");

  // Express every primitive relation in the kernel basis, then check the
  // span has index 1 via SNF.
  IntMatrix bt = rl.basis.transpose();  // n x r
  auto res = hnf(bt);                   // res.u * bt = res.h, top r rows triangular
  std::vector<IVec> rows;
  for (const auto& rel : p.relations()) {
    IVec v = p.relation_vector(rel);
    IVec rhs = res.u.apply(v);
    IVec y(r, Int(0));
    for (std::size_t i = r; i < rhs.size(); ++i)
      if (rhs[i] != 0) throw error("relation_lattice: relation outside kernel (internal)");
    for (std::size_t i = r; i-- > 0;) {
      Int acc = rhs[i];
      for (std::size_t j = i + 1; j < r; ++j) acc -= res.h.at(i, j) * y[j];
      if (acc % res.h.at(i, i) != 0)
        throw error("relation_lattice: non-integral kernel coordinates (internal)");
      y[i] = acc / res.h.at(i, i);
    }
    rows.push_back(std::move(y));
  }
  if (rows.empty()) {
    rl.generated_by_primitive_relations = (r == 0);
    return rl;
  }
  auto s = snf(IntMatrix::from_rows(rows));
  std::size_t rank_count = 0;
  bool all_ones = true;
  for (std::size_t i = 0; i < std::min(s.s.rows(), s.s.cols()); ++i) {
    if (s.s.at(i, i) == 0) continue;
    ++rank_count;
    if (s.s.at(i, i) != 1) all_ones = false;
  }
  rl.generated_by_primitive_relations = (rank_count == r) && all_ones;
  return rl;
}

std::vector<PrimitiveRelation> extremal_rays(const FanoPolytope& p) {
  const auto& rels = p.relations();
  std::vector<IVec> vectors;
  for (const auto& r : rels) vectors.push_back(p.relation_vector(r));
  std::vector<PrimitiveRelation> out;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    std::vector<IVec> others;
    for (std::size_t j = 0; j < rels.size(); ++j)
      if (j != i && vectors[j] != vectors[i]) others.push_back(vectors[j]);
    if (!cone_member(vectors[i], others)) out.push_back(rels[i]);
  }
  return out;
}

NormalBundle normal_bundle_type(const FanoPolytope& p, const PrimitiveRelation& rel) {
  auto ext = extremal_rays(p);
  if (std::find(ext.begin(), ext.end(), rel) == ext.end())
    throw error("normal_bundle_type: relation is not extremal");
  const int k = static_cast<int>(rel.collection.size());
  const int m = static_cast<int>(rel.support.size());
  NormalBundle nb;
  for (int i = 0; i < k - 2; ++i) nb.degrees.push_back(1);
  for (int i = 0; i < p.dim() + 1 - k - m; ++i) nb.degrees.push_back(0);
  for (const auto& c : rel.coeffs) nb.degrees.push_back(-c);
  nb.anticanonical_degree = rel.degree;
  return nb;
}

WallData wall_relation(const FanoPolytope& p, const std::vector<int>& ridge) {
  std::vector<int> r = ridge;
  std::sort(r.begin(), r.end());
  if (r.size() != static_cast<std::size_t>(p.dim()) - 1 || !p.is_face(r))
    throw error("wall_relation: not a (d-2)-face");
  std::vector<int> completing;
  for (const auto& f : p.facets()) {
    if (!std::includes(f.verts.begin(), f.verts.end(), r.begin(), r.end())) continue;
    for (int v : f.verts)
      if (!std::binary_search(r.begin(), r.end(), v)) completing.push_back(v);
  }
  if (completing.size() != 2) throw error("wall_relation: ridge not in exactly two facets (internal)");
  int a = completing[0], b = completing[1];
  // solve v_a + v_b + sum x_i ridge_i = 0 in the basis of the facet {ridge, a}
  IVec rhs = neg(add(p.vertex(a), p.vertex(b)));
  std::vector<IVec> cols;
  for (int v : r) cols.push_back(p.vertex(v));
  // coefficients over the ridge: rhs = sum x_i ridge_i must be solvable
  // inside the facet basis; solve the (d x (d-1)) system by extending with a
  IntMatrix basis = IntMatrix::from_columns([&] {
    std::vector<IVec> c = cols;
    c.push_back(p.vertex(a));
    return c;
  }());
  auto sol = solve_rational(basis, rhs);
  if (!sol) throw error("wall_relation: singular facet basis (internal)");
  WallData w;
  w.ridge = r;
  w.opposite_a = a;
  w.opposite_b = b;
  for (std::size_t i = 0; i + 1 < sol->size(); ++i) {
    const Rat& q = (*sol)[i];
    if (boost::multiprecision::denominator(q) != 1)
      throw error("wall_relation: non-integral coefficient (internal)");
    w.x.push_back(boost::multiprecision::numerator(q));
  }
  // the coefficient on v_a must absorb v_a exactly once: rhs already includes
  // -v_a - v_b, so the last coordinate must be 0 after accounting; verify.
  if (sol->back() != 0)
    throw error("wall_relation: opposite vertex coefficient not -1 (internal)");
  w.normal_degree = 0;
  for (const auto& c : w.x) w.normal_degree += c;
  w.anticanonical_degree = w.normal_degree + 2;
  return w;
}

std::vector<WallData> all_walls(const FanoPolytope& p) {
  std::set<std::vector<int>> ridges;
  for (const auto& f : p.facets()) {
    const auto& vs = f.verts;
    for (std::size_t skip = 0; skip < vs.size(); ++skip) {
      std::vector<int> r;
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (i != skip) r.push_back(vs[i]);
      ridges.insert(r);
    }
  }
  std::vector<WallData> out;
  for (const auto& r : ridges) out.push_back(wall_relation(p, r));
  return out;
}

Int total_weight(const FanoPolytope& p) {
  const int d = p.dim();
  if (d < 3) throw dimension_error("total_weight: requires dimension >= 3");
  Int sum = 0;
  for (const auto& w : all_walls(p)) sum += w.normal_degree;
  const auto& f = p.f_vector();
  Int expected = 12 * f[d - 3] - 3 * (d - 1) * f[d - 2];
  if (sum != expected) throw error("total_weight: weighted-triangulation identity failed (internal)");
  return sum;
}

bool wall_in_mori_cone(const FanoPolytope& p, const WallData& w) {
  IVec wall_vec(p.size(), Int(0));
  wall_vec[w.opposite_a] += 1;
  wall_vec[w.opposite_b] += 1;
  for (std::size_t i = 0; i < w.ridge.size(); ++i) wall_vec[w.ridge[i]] += w.x[i];
  std::vector<IVec> gens;
  for (const auto& r : p.relations()) gens.push_back(p.relation_vector(r));
  return cone_member(wall_vec, gens);
}

}  // namespace fano
