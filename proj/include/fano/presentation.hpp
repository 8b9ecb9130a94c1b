#pragma once

#include "fano/polytope.hpp"

#include <map>

namespace fano {

/// A polytope given by its primitive relations (0-based indices in memory;
/// file formats are 1-based to match the usual v_1, v_2, ... numbering).
struct PresentationRelation {
  std::vector<int> members;   // sorted
  std::map<int, Int> target;  // support index -> positive coefficient
};

struct Presentation {
  int n = 0;
  int dim = 0;
  std::vector<PresentationRelation> collections;
};

struct reconstruction_error : error {
  using error::error;
};

/// Solve a presentation back into coordinates: pick the lexicographically
/// first d-subset face as the standard basis, solve the relation system
/// exactly, validate, and require the recomputed relations to equal the
/// input. The result is well-defined up to isomorphism.
FanoPolytope reconstruct(const Presentation& pres);

Presentation presentation_of(const FanoPolytope& p);

/// Free sum: P x {0} union {0} x Q in dimension d1 + d2 (polytope of the
/// product variety).
FanoPolytope direct_sum(const FanoPolytope& a, const FanoPolytope& b);

}  // namespace fano
