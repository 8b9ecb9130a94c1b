#pragma once

#include "fano/polytope.hpp"

namespace fano {

struct DoublePoint {
  IVec point;  // nonzero image in quotient coordinates
  int pre_j, pre_k;
  int link;    // vertex index named by the forced relation
  int base;    // the other preimage
};

/// Quotient of P along a vertex: images, hull of the projected polytope,
/// double points with their links.
struct Projection {
  int base = -1;
  IntMatrix quotient;                 // (d-1) x d, quotient * v_base = 0
  std::vector<IVec> images;           // per vertex; images[base] is the zero vector
  std::vector<IVec> distinct_points;  // distinct images, input order
  Hull hull;                          // hull of distinct_points
  std::vector<DoublePoint> double_points;

  std::vector<IVec> pi_vertices() const {  // vertex coordinates of P_i
    std::vector<IVec> out;
    for (int v : hull.vertices) out.push_back(distinct_points[v]);
    return out;
  }
};

Projection project(const FanoPolytope& p, int i);

/// P_i is reflexive (must hold for every vertex of a Fano polytope).
bool check_reflexive_projection(const FanoPolytope& p, int i);

struct DivisorFanoCheck {
  std::optional<Int> min_collection_degree;  // over collections containing i
  bool projected_is_fano;
};

DivisorFanoCheck divisor_fano_check(const FanoPolytope& p, int i);

enum class FaceType { F1, F2, F3, F4 };

const char* to_string(FaceType t);

/// Classify the lattice points of a 2-face of a 3-dimensional reflexive
/// polytope into the four possible patterns:
///   F1 unimodular triangle, F2 triangle with centroid,
///   F3 triangle with an edge midpoint, F4 unimodular parallelogram.
/// Throws error("not a Prop 3.1 face") when nothing matches.
FaceType classify_2face(const std::vector<IVec>& face_lattice_points);

/// Per-facet classification of the 3-dimensional projection P_i.
struct ProjectionFaceReport {
  std::vector<FaceType> facet_types;  // parallel to projection hull facets
  int f4_count = 0;
};

ProjectionFaceReport classify_projection_faces(const FanoPolytope& p, const Projection& proj);

/// Same, with the lattice points of P_i supplied by the caller.
ProjectionFaceReport classify_projection_faces(const FanoPolytope& p, const Projection& proj,
                                               const std::vector<IVec>& pi_lattice_points);

/// f3(P) = 4 alpha_i + beta_i - 8 + sum of double-vertex valences, for an
/// antipodal pair (i, j). Throws unless v_i + v_j = 0 is a primitive relation.
bool f3_formula_check(const FanoPolytope& p, int i, int j);

}  // namespace fano
