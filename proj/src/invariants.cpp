#include "fano/invariants.hpp"

#include "fano/relations.hpp"

namespace fano {

namespace {

Int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace

std::vector<Int> h_vector(const FanoPolytope& p) {
  const int d = p.dim();
  const auto& f = p.f_vector();
  std::vector<Int> h(d + 1, Int(0));
  for (int k = 0; k <= d; ++k) {
    // h_k = sum_{i=0..k} (-1)^{k-i} C(d-i, k-i) f_{i-1},  f_{-1} = 1
    for (int i = 0; i <= k; ++i) {
      Int fi = (i == 0) ? Int(1) : f[i - 1];
      Int term = binom(d - i, k - i) * fi;
      h[k] += ((k - i) % 2 == 0) ? term : -term;
    }
  }
  return h;
}

std::pair<Int, Int> betti(const FanoPolytope& p) {
  auto h = h_vector(p);
  Int b2 = h.size() > 1 ? h[1] : Int(0);
  Int b4 = h.size() > 2 ? h[2] : Int(0);
  return {b2, b4};
}

Int anticanonical_degree(const FanoPolytope& p) {
  Rat v = volume(dual_polytope(p));
  Rat scaled = v;
  for (int i = 2; i <= p.dim(); ++i) scaled *= i;
  if (boost::multiprecision::denominator(scaled) != 1)
    throw error("anticanonical_degree: d! * vol not integral (internal)");
  return boost::multiprecision::numerator(scaled);
}

Int h0(const FanoPolytope& p) {
  return Int(lattice_points(dual_polytope(p)).size());
}

Int c1sq_c2(const FanoPolytope& p) {
  if (p.dim() != 4) throw dimension_error("c1sq_c2: defined for dimension 4 only");
  return 12 * (h0(p) - 1) - 2 * anticanonical_degree(p);
}

Int aut_dim(const FanoPolytope& p) {
  if (p.dim() != 4) throw dimension_error("aut_dim: defined for dimension 4 only");
  auto [b2, b4] = betti(p);
  Int num = 2 * anticanonical_degree(p) - 5 * c1sq_c2(p);
  if (num % 12 != 0) throw error("aut_dim: 12 does not divide 2c1^4 - 5c1^2c2");
  return 22 + 3 * b2 - b4 + num / 12;
}

Int h21(const FanoPolytope& p) {
  if (p.dim() != 4) throw dimension_error("h21: defined for dimension 4 only");
  auto [b2, b4] = betti(p);
  Int via_h0 = h0(p) - aut_dim(p) - 1;
  Int cc = c1sq_c2(p);
  if (cc % 2 != 0) throw error("h21: c1^2c2 odd");
  Int via_chern = cc / 2 + b4 - 3 * b2 - 22;
  if (via_h0 != via_chern)
    throw error("h21: closing formulas disagree: " + via_h0.str() + " vs " + via_chern.str());
  return via_h0;
}

BoundsReport bounds_check(const FanoPolytope& p) {
  const int d = p.dim();
  const auto& f = p.f_vector();
  BoundsReport r;
  r.vertex_bound_exp = f[0] <= 2 * ((Int(1) << d) - 1);
  r.vertex_bound_poly = d <= 2 || f[0] <= d * d + 1;
  r.weight_inequality = true;
  if (d >= 3) r.weight_inequality = 12 * f[d - 3] >= (3 * d - 4) * f[d - 2];
  r.edge_inequality = d != 4 || 4 * f[0] >= f[1];
  r.dehn_sommerville = d != 4 || (f[2] == 2 * (f[1] - f[0]) && f[3] == f[1] - f[0]);
  return r;
}

InvariantReport invariants(const FanoPolytope& p) {
  InvariantReport rep;
  rep.dim = p.dim();
  rep.f = p.f_vector().f;
  rep.h = h_vector(p);
  auto [b2, b4] = betti(p);
  rep.b2 = b2;
  if (p.dim() == 4) rep.b4 = b4;
  rep.c1_pow_d = anticanonical_degree(p);
  rep.h0 = h0(p);
  if (p.dim() == 4) {
    rep.c1sq_c2 = c1sq_c2(p);
    rep.aut_dim = aut_dim(p);
    rep.h21 = h21(p);
  }
  if (p.dim() >= 3) rep.total_weight = total_weight(p);
  return rep;
}

}  // namespace fano
