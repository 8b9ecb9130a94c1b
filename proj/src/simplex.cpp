#include "fano/simplex.hpp"

namespace fano {

// Phase-1 simplex on the tableau
//   [ A | I ] [lambda; art] = b,  b >= 0,  minimize sum(art).
// Bland's rule on both the entering and leaving choice.
bool feasible_nonneg(const std::vector<RVec>& columns, const RVec& b) {
  const std::size_t m = b.size();
  const std::size_t n = columns.size();
  for (const auto& c : columns)
    if (c.size() != m) throw dimension_error("feasible_nonneg: column size mismatch");

  // tableau: m rows, n + m columns, plus rhs
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n + m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    int flip = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip * columns[j][i];
    t[i][n + i] = 1;
    t[i][n + m] = flip * b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // reduced-cost row for minimizing the artificial sum: the artificial
  // columns are basic, so their reduced costs start at zero
  std::vector<Rat> z(n + m + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n + m; ++j) z[j] += t[i][j];
  for (std::size_t j = n; j < n + m; ++j) z[j] = 0;

  while (true) {
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (z[j] > 0) { enter = j; break; }  // Bland: first improving column
    }
    if (enter == n + m) break;
    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      if (leave == m) { leave = i; continue; }
      Rat cur = t[i][n + m] / t[i][enter];
      Rat best = t[leave][n + m] / t[leave][enter];
      if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
    }
    if (leave == m) throw error("simplex: unbounded phase-1 direction (internal)");
    // pivot
    Rat piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
    }
    Rat f = z[enter];
    if (f != 0)
      for (std::size_t j = 0; j <= n + m; ++j) z[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  return z[n + m] == 0;
}

bool cone_member(const IVec& target, const std::vector<IVec>& generators) {
  if (generators.empty()) return is_zero(target);
  std::vector<RVec> cols;
  cols.reserve(generators.size());
  for (const auto& g : generators) {
    RVec c(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) c[i] = Rat(g[i]);
    cols.push_back(std::move(c));
  }
  RVec b(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) b[i] = Rat(target[i]);
  return feasible_nonneg(cols, b);
}

bool convex_member(const IVec& point, const std::vector<IVec>& points) {
  if (points.empty()) return false;
  const std::size_t d = point.size();
  std::vector<RVec> cols;
  cols.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != d) throw dimension_error("convex_member: dimension mismatch");
    RVec c(d + 1);
    for (std::size_t i = 0; i < d; ++i) c[i] = Rat(p[i]);
    c[d] = 1;
    cols.push_back(std::move(c));
  }
  RVec b(d + 1);
  for (std::size_t i = 0; i < d; ++i) b[i] = Rat(point[i]);
  b[d] = 1;
  return feasible_nonneg(cols, b);
}

}  // namespace fano
