#pragma once

#include "fano/polytope.hpp"

#include <optional>
#include <string>

namespace fano {

struct CanonicalForm {
  IntMatrix matrix;    // d x n, columns sorted, lexicographically minimal frame
  std::string digest;  // stable content hash of the matrix

  bool operator==(const CanonicalForm& o) const { return matrix == o.matrix; }
  bool operator<(const CanonicalForm& o) const { return matrix.lex_less(o.matrix); }
};

/// Unimodular map carrying the vertex set of p1 onto that of p2, or nullopt.
/// Exhaustive over (facet of p2, vertex ordering) images of a fixed facet of p1.
std::optional<IntMatrix> are_isomorphic(const FanoPolytope& p1, const FanoPolytope& p2);

/// Lexicographically minimal column-sorted vertex matrix over all frames in
/// which one ordered facet becomes the standard basis. Equal canonical forms
/// characterize isomorphism.
CanonicalForm canonical_form(const FanoPolytope& p);

/// Vertex bijection matching the primitive-collection hypergraphs, or nullopt.
std::optional<std::vector<int>> comb_equivalent(const FanoPolytope& p1, const FanoPolytope& p2);

/// Largest |coordinate| over all facet-basis frames; enumeration box audit.
Int max_frame_coordinate(const FanoPolytope& p);

}  // namespace fano
