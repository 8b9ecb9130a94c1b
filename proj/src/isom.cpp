#include "fano/isom.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>

namespace fano {

namespace {

// All frame transforms sending some ordered facet of p to the standard basis.
template <typename Fn>
void for_each_frame(const FanoPolytope& p, Fn&& fn) {
  for (const auto& f : p.facets()) {
    std::vector<int> order = f.verts;
    std::sort(order.begin(), order.end());
    do {
      IntMatrix b = IntMatrix::from_columns([&] {
        std::vector<IVec> cols;
        for (int v : order) cols.push_back(p.vertex(v));
        return cols;
      }());
      fn(inverse_unimodular(b));
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

IntMatrix sorted_column_matrix(const FanoPolytope& p, const IntMatrix& transform) {
  std::vector<IVec> cols;
  cols.reserve(p.size());
  for (const auto& v : p.vertices()) cols.push_back(transform.apply(v));
  std::sort(cols.begin(), cols.end());
  return IntMatrix::from_columns(cols);
}

std::string fnv_digest(const IntMatrix& m) {
  std::string s = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j).str() + ",";
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace

std::optional<IntMatrix> are_isomorphic(const FanoPolytope& p1, const FanoPolytope& p2) {
  if (p1.dim() != p2.dim() || p1.size() != p2.size()) return std::nullopt;
  std::set<IVec> target(p2.vertices().begin(), p2.vertices().end());

  const auto& f1 = p1.facets().front();
  IntMatrix b1 = IntMatrix::from_columns([&] {
    std::vector<IVec> cols;
    for (int v : f1.verts) cols.push_back(p1.vertex(v));
    return cols;
  }());
  IntMatrix b1_inv = inverse_unimodular(b1);

  std::optional<IntMatrix> found;
  for (const auto& f2 : p2.facets()) {
    std::vector<int> order = f2.verts;
    std::sort(order.begin(), order.end());
    do {
      IntMatrix b2 = IntMatrix::from_columns([&] {
        std::vector<IVec> cols;
        for (int v : order) cols.push_back(p2.vertex(v));
        return cols;
      }());
      IntMatrix a = b2 * b1_inv;  // a * b1 = b2
      bool ok = true;
      for (const auto& v : p1.vertices()) {
        if (!target.count(a.apply(v))) { ok = false; break; }
      }
      if (ok) return a;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return std::nullopt;
}

CanonicalForm canonical_form(const FanoPolytope& p) {
  std::optional<IntMatrix> best;
  for_each_frame(p, [&](const IntMatrix& t) {
    IntMatrix m = sorted_column_matrix(p, t);
    if (!best || m.lex_less(*best)) best = std::move(m);
  });
  if (!best) throw error("canonical_form: no facets (internal)");
  CanonicalForm cf;
  cf.matrix = *best;
  cf.digest = fnv_digest(*best);
  return cf;
}

std::optional<std::vector<int>> comb_equivalent(const FanoPolytope& p1, const FanoPolytope& p2) {
  if (p1.dim() != p2.dim() || p1.size() != p2.size()) return std::nullopt;
  const int n = p1.size();
  std::vector<std::vector<int>> c1, c2;
  for (const auto& r : p1.relations()) c1.push_back(r.collection);
  for (const auto& r : p2.relations()) c2.push_back(r.collection);
  if (c1.size() != c2.size()) return std::nullopt;

  // profile pruning: multiset of collection sizes through each vertex
  auto profile = [n](const std::vector<std::vector<int>>& cs) {
    std::vector<std::vector<int>> prof(n);
    for (const auto& c : cs)
      for (int v : c) prof[v].push_back(static_cast<int>(c.size()));
    for (auto& p : prof) std::sort(p.begin(), p.end());
    return prof;
  };
  auto prof1 = profile(c1), prof2 = profile(c2);

  std::set<std::vector<int>> set2(c2.begin(), c2.end());
  std::vector<int> map(n, -1), used(n, 0);

  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == n) {
      // full check: image of every collection is a collection, count matches
      std::set<std::vector<int>> img;
      for (const auto& c : c1) {
        std::vector<int> ic;
        for (int x : c) ic.push_back(map[x]);
        std::sort(ic.begin(), ic.end());
        img.insert(std::move(ic));
      }
      return img == set2;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || prof1[v] != prof2[w]) continue;
      map[v] = w;
      used[w] = 1;
      // partial consistency: fully-mapped collections must land on collections
      bool ok = true;
      for (const auto& c : c1) {
        bool complete = true;
        for (int x : c)
          if (map[x] < 0) { complete = false; break; }
        if (!complete) continue;
        std::vector<int> ic;
        for (int x : c) ic.push_back(map[x]);
        std::sort(ic.begin(), ic.end());
        if (!set2.count(ic)) { ok = false; break; }
      }
      if (ok && rec(v + 1)) return true;
      map[v] = -1;
      used[w] = 0;
    }
    return false;
  };
  if (rec(0)) return map;
  return std::nullopt;
}

Int max_frame_coordinate(const FanoPolytope& p) {
  Int best = 0;
  for_each_frame(p, [&](const IntMatrix& t) {
    for (const auto& v : p.vertices()) {
      for (const auto& x : t.apply(v)) {
        Int a = abs(x);
        if (a > best) best = a;
      }
    }
  });
  return best;
}

}  // namespace fano
