#pragma once

#include "fano/matrix.hpp"

namespace fano {

struct HullFacet {
  IVec normal;                 // primitive integral outer normal
  Int level;                   // <normal, x> = level on the facet, level > 0
  std::vector<int> incident;   // all input points on the hyperplane, sorted
  std::vector<int> corners;    // facet vertices; cyclic order when the facet is 2-dim
};

struct Hull {
  int dim = 0;
  std::vector<HullFacet> facets;
  std::vector<int> vertices;   // indices of input points that are hull vertices, sorted
};

/// Facet structure of conv(pts) for a full-dimensional lattice point set with
/// the origin strictly interior. Coplanar supports are merged into one facet.
/// Throws error("too few points"), error("not full-dimensional"),
/// error("origin not interior").
Hull hull_scan(int dim, const std::vector<IVec>& pts);

/// Ridge closure check: every ridge of the boundary complex lies in exactly
/// two facets. Covers simplicial complexes in any dim and merged complexes up
/// to dim 3 (where ridges are polygon edges).
bool hull_closed(const Hull& h);

}  // namespace fano
