#pragma once

#include "fano/matrix.hpp"

#include <optional>
#include <utility>

namespace fano {

/// Exact determinant (fraction-free Bareiss). Throws dimension_error unless square.
Int det(const IntMatrix& m);

struct HnfResult {
  IntMatrix h;  // row-style Hermite normal form
  IntMatrix u;  // unimodular, u * m == h
};

/// Row-style HNF: pivots positive, entries above each pivot reduced into [0, pivot).
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
  IntMatrix s;  // diagonal, d1 | d2 | ...
  IntMatrix u;  // unimodular
  IntMatrix v;  // unimodular, u * m * v == s
};

SnfResult snf(const IntMatrix& m);

/// Exact solution of A x = b for square A.
/// Returns nullopt when A is singular and b is not in its column span.
/// Throws on a consistent underdetermined system (callers pre-reduce via hnf).
std::optional<RVec> solve_rational(const IntMatrix& a, const IVec& b);

/// Basis of the integer kernel lattice {x : m x = 0}; rows are basis vectors.
/// The basis is saturated (spans the full kernel lattice, not a sublattice).
IntMatrix kernel_basis(const IntMatrix& m);

/// Inverse of a unimodular matrix, exact and integral.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Matrix Q of the projection Z^d -> Z^d / Z<v> for primitive v:
/// (d-1) x d, Q v = 0, Q surjective onto Z^{d-1}.
IntMatrix quotient_projection(const IVec& v);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

}  // namespace fano
