#pragma once

#include "fano/matrix.hpp"

namespace fano {

/// Exact feasibility of { lambda >= 0 : A lambda = b } via phase-1 simplex
/// with Bland's rule (deterministic, terminating). A is given column-wise.
bool feasible_nonneg(const std::vector<RVec>& columns, const RVec& b);

/// target in cone(generators)?  Everything exact; generators as integer vectors.
bool cone_member(const IVec& target, const std::vector<IVec>& generators);

/// point in conv(points)?
bool convex_member(const IVec& point, const std::vector<IVec>& points);

}  // namespace fano
