#pragma once

#include "fano/polytope.hpp"

namespace fano {

/// All primitive collections (the relations carry them; this strips targets).
std::vector<std::vector<int>> primitive_collections(const FanoPolytope& p);

struct RelationLattice {
  IntMatrix basis;        // rows: a basis of L(P), the kernel of the vertex matrix
  bool generated_by_primitive_relations;  // SNF index 1 check
};

RelationLattice relation_lattice(const FanoPolytope& p);

/// Relations spanning 1-dimensional faces of the Mori cone. A generator is
/// extremal iff it is not a nonnegative combination of the others (exact).
std::vector<PrimitiveRelation> extremal_rays(const FanoPolytope& p);

struct NormalBundle {
  std::vector<Int> degrees;  // multiset: (k-2) ones, (d+1-k-m) zeros, -c_1..-c_m
  Int anticanonical_degree;  // = degree of the relation
};

/// Normal bundle splitting type of the rational curve of an extremal relation.
/// Throws when rel is not extremal.
NormalBundle normal_bundle_type(const FanoPolytope& p, const PrimitiveRelation& rel);

struct WallData {
  std::vector<int> ridge;   // (d-2)-face vertex indices, sorted
  int opposite_a, opposite_b;
  IVec x;                   // v_a + v_b + sum(x_i * ridge_i) = 0
  Int normal_degree;        // sum(x)
  Int anticanonical_degree; // 2 + sum(x)
};

WallData wall_relation(const FanoPolytope& p, const std::vector<int>& ridge);

std::vector<WallData> all_walls(const FanoPolytope& p);

/// Sum of wall normal degrees; checked against 12 f_{d-3} - 3(d-1) f_{d-2}.
Int total_weight(const FanoPolytope& p);

/// Is the wall relation vector inside the cone spanned by the primitive
/// relation vectors (Mori cone containment)?
bool wall_in_mori_cone(const FanoPolytope& p, const WallData& w);

}  // namespace fano
