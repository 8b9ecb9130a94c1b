#pragma once

#include "fano/polytope.hpp"

#include <optional>

namespace fano {

struct InvariantReport {
  int dim = 0;
  std::vector<Int> f;            // f-vector
  std::vector<Int> h;            // h-vector of the boundary sphere
  Int b2;
  std::optional<Int> b4;         // dim 4
  Int c1_pow_d;                  // d! * vol(dual)
  Int h0;                        // lattice points of the dual
  std::optional<Int> c1sq_c2;    // dim 4
  std::optional<Int> aut_dim;    // dim 4
  std::optional<Int> h21;        // dim 4
  std::optional<Int> total_weight;  // dim >= 3
};

/// h-vector of the boundary complex; b_{2k} = h_k.
std::vector<Int> h_vector(const FanoPolytope& p);

/// (b2, b4); b4 only meaningful in dimension 4.
std::pair<Int, Int> betti(const FanoPolytope& p);

/// c1^d = d! * volume of the dual polytope (always integral).
Int anticanonical_degree(const FanoPolytope& p);

/// h^0(-K) = number of lattice points of the dual polytope.
Int h0(const FanoPolytope& p);

/// c1^2 c2 = 12 (h0 - 1) - 2 c1^4, dimension 4 only.
Int c1sq_c2(const FanoPolytope& p);

/// dim Aut = 22 + 3 b2 - b4 + (2 c1^4 - 5 c1^2c2)/12, dimension 4 only.
Int aut_dim(const FanoPolytope& p);

/// h^{2,1} of the anticanonical Calabi-Yau hypersurface; both closing
/// formulas evaluated and compared, dimension 4 only.
Int h21(const FanoPolytope& p);

struct BoundsReport {
  bool vertex_bound_exp;    // f0 <= 2(2^d - 1)
  bool vertex_bound_poly;   // f0 <= d^2 + 1 (d > 2)
  bool weight_inequality;   // 12 f_{d-3} >= (3d-4) f_{d-2} (d >= 3)
  bool edge_inequality;     // 4 f0 >= f1 (d = 4)
  bool dehn_sommerville;    // f2 = 2(f1 - f0), f3 = f1 - f0 (d = 4)
  bool all_ok() const {
    return vertex_bound_exp && vertex_bound_poly && weight_inequality && edge_inequality &&
           dehn_sommerville;
  }
};

BoundsReport bounds_check(const FanoPolytope& p);

InvariantReport invariants(const FanoPolytope& p);

}  // namespace fano
