#pragma once

#include "fano/polytope.hpp"

namespace fano {

/// Complete simplicial fan with unimodular maximal cones, given explicitly.
/// Unlike a Fano polytope, the convex hull of the generators plays no role,
/// so non-Fano nef examples are representable.
struct Fan {
  int dim = 0;
  std::vector<IVec> generators;
  std::vector<std::vector<int>> max_cones;  // generator index sets, size dim

  static Fan from_polytope(const FanoPolytope& p);
};

enum class Ampleness { ample, nef_only, not_nef };

/// Relations of the fan's primitive collections (degrees may be <= 0 here).
std::vector<PrimitiveRelation> fan_relations(const Fan& fan);

/// Anticanonical positivity via primitive-relation degrees:
/// ample iff all > 0, nef iff all >= 0.
/// Throws error("fan not complete/regular") when the input fails validation.
Ampleness ampleness(const Fan& fan);

const char* to_string(Ampleness a);

}  // namespace fano
