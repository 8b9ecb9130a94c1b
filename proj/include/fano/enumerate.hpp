#pragma once

#include "fano/isom.hpp"

namespace fano {

struct EnumConfig {
  int dim = 2;
  int box = 0;           // 0: dimension default (1, 2, 3)
  int max_vertices = 0;  // 0: default 2(2^d - 1)
  int jobs = 1;
};

/// Exhaustive classification of Fano polytopes for dim <= 3 by bounded-box
/// backtracking over the standard first facet. Output is the sorted list of
/// canonical forms; complete provided the box bound covers all classes
/// (defended by boundary_audit).
std::vector<CanonicalForm> enumerate_fano(const EnumConfig& cfg);

struct BoundaryAudit {
  bool pass = false;
  Int max_abs;  // largest |coordinate| seen over all facet frames of all classes
};

/// No enumerated class may attain |coordinate| = box in any facet-basis
/// frame; otherwise the box is flagged as possibly too small.
BoundaryAudit boundary_audit(const std::vector<CanonicalForm>& classes, int box);

int default_box(int dim);

}  // namespace fano
