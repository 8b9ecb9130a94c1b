#pragma once

#include "fano/hull.hpp"
#include "fano/linalg.hpp"

#include <optional>
#include <string>

namespace fano {

/// Rejection of validate_fano, naming the first violated condition.
struct validation_error : error {
  std::string condition;
  validation_error(std::string cond, const std::string& msg)
      : error(msg), condition(std::move(cond)) {}
};

struct FVector {
  std::vector<Int> f;  // f[0] = vertex count, ..., f[d-1] = facet count
  const Int& operator[](std::size_t i) const { return f.at(i); }
};

struct PrimitiveRelation {
  std::vector<int> collection;  // sorted, 0-based vertex indices
  std::vector<int> support;     // sorted; empty when the sum is zero
  IVec coeffs;                  // parallel to support, all positive
  Int degree;                   // |collection| - sum(coeffs)

  bool operator==(const PrimitiveRelation& o) const {
    return collection == o.collection && support == o.support && coeffs == o.coeffs;
  }
};

struct Facet {
  std::vector<int> verts;  // sorted, exactly d vertices
  IVec normal;             // integral, <normal, v> = 1 on the facet, <= 0 elsewhere
  IntMatrix basis_inverse; // inverse of the column matrix of facet vertices
};

/// A validated Fano polytope: simplicial, 0 strictly interior, every facet a
/// lattice basis. Immutable; all derived structure is computed on validation.
class FanoPolytope {
 public:
  static FanoPolytope validate(int dim, const std::vector<IVec>& points);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(verts_.size()); }
  const IVec& vertex(int i) const { return verts_.at(i); }
  const std::vector<IVec>& vertices() const { return verts_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const FVector& f_vector() const { return fvec_; }
  const std::vector<PrimitiveRelation>& relations() const { return relations_; }

  bool is_face(std::vector<int> s) const;
  bool is_edge(int i, int j) const;
  int valence(int i) const;

  /// Minimal cone of the face fan containing an integral point:
  /// (support indices, positive integral coordinates). Empty support for 0.
  std::pair<std::vector<int>, IVec> locate(const IVec& point) const;

  /// n-vector of the relation lambda with sum(lambda_i v_i) = 0.
  IVec relation_vector(const PrimitiveRelation& r) const;

 private:
  int dim_ = 0;
  std::vector<IVec> verts_;
  std::vector<Facet> facets_;
  std::vector<std::pair<int, int>> edges_;
  FVector fvec_;
  std::vector<PrimitiveRelation> relations_;
};

struct RationalFacet {
  IVec normal;  // integral
  Rat level;    // <normal, x> <= level
};

/// Rational polytope with explicit face lattice (needed for exact volume).
struct RationalPolytope {
  int dim = 0;
  bool degenerate = false;
  std::vector<RVec> verts;
  std::vector<RationalFacet> ineqs;
  // faces[k] = vertex index sets of the k-dimensional faces, k = 0..dim-1
  std::vector<std::vector<std::vector<int>>> faces;

  static RationalPolytope from_lattice_points(int dim, const std::vector<IVec>& pts);
};

/// Facet structure of a full-dimensional lattice point set with 0 interior;
/// coplanar supports merged (projected polytopes). Thin wrapper over hull_scan.
Hull facets(int dim, const std::vector<IVec>& pts);

FVector f_vector(const FanoPolytope& p);

/// Reflexivity of conv(pts): all facets at integral level 1 (primitive
/// normals) and 0 the unique interior lattice point.
bool is_reflexive(int dim, const std::vector<IVec>& pts);

/// Polar dual { y : <y, v> <= 1 for all vertices v }, with the face lattice
/// carried over from P by polarity.
RationalPolytope dual_polytope(const FanoPolytope& p);

/// All lattice points of Q in deterministic lexicographic order.
std::vector<IVec> lattice_points(const RationalPolytope& q);

/// Interior lattice points (all inequalities strict).
std::vector<IVec> interior_lattice_points(const RationalPolytope& q);

/// Exact Euclidean volume via the central triangulation over pulled facet
/// triangulations. Degenerate input gives 0.
Rat volume(const RationalPolytope& q);

}  // namespace fano
