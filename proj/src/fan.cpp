#include "fano/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace fano {

Fan Fan::from_polytope(const FanoPolytope& p) {
  Fan f;
  f.dim = p.dim();
  f.generators = p.vertices();
  for (const auto& facet : p.facets()) f.max_cones.push_back(facet.verts);
  return f;
}

namespace {

struct FanChecked {
  std::vector<IntMatrix> inverses;  // per max cone
};

FanChecked check_fan(const Fan& fan) {
  const int d = fan.dim;
  const std::size_t n = fan.generators.size();
  if (d < 1 || n < static_cast<std::size_t>(d) + 1) throw error("fan not complete/regular");
  for (const auto& g : fan.generators) {
    if (static_cast<int>(g.size()) != d || !is_primitive(g)) throw error("fan not complete/regular");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (fan.generators[i] == fan.generators[j]) throw error("fan not complete/regular");

  std::set<int> used;
  FanChecked out;
  std::map<std::vector<int>, std::vector<std::size_t>> wall_to_cones;
  for (std::size_t ci = 0; ci < fan.max_cones.size(); ++ci) {
    auto cone = fan.max_cones[ci];
    std::sort(cone.begin(), cone.end());
    if (cone.size() != static_cast<std::size_t>(d)) throw error("fan not complete/regular");
    for (int v : cone) {
      if (v < 0 || v >= static_cast<int>(n)) throw error("fan not complete/regular");
      used.insert(v);
    }
    IntMatrix m = IntMatrix::from_columns([&] {
      std::vector<IVec> cols;
      for (int v : cone) cols.push_back(fan.generators[v]);
      return cols;
    }());
    Int dt = det(m);
    if (dt != 1 && dt != -1) throw error("fan not complete/regular");
    out.inverses.push_back(inverse_unimodular(m));
    for (std::size_t skip = 0; skip < cone.size(); ++skip) {
      std::vector<int> wall;
      for (std::size_t i = 0; i < cone.size(); ++i)
        if (i != skip) wall.push_back(cone[i]);
      wall_to_cones[wall].push_back(ci);
    }
  }
  if (used.size() != n) throw error("fan not complete/regular");

  if (d == 1) {
    if (fan.max_cones.size() != 2) throw error("fan not complete/regular");
    if (fan.generators[fan.max_cones[0][0]][0].sign() ==
        fan.generators[fan.max_cones[1][0]][0].sign())
      throw error("fan not complete/regular");
    return out;
  }

  // every wall in exactly two cones, opposite generators strictly separated
  for (const auto& [wall, cones] : wall_to_cones) {
    if (cones.size() != 2) throw error("fan not complete/regular");
    IntMatrix wm = IntMatrix::from_rows([&] {
      std::vector<IVec> rows;
      for (int v : wall) rows.push_back(fan.generators[v]);
      return rows;
    }());
    IntMatrix k = kernel_basis(wm);  // 1-dim kernel: the wall hyperplane normal
    if (k.rows() != 1) throw error("fan not complete/regular");
    IVec h = k.row(0);
    auto opposite = [&](std::size_t ci) {
      std::vector<int> cone = fan.max_cones[ci];
      std::sort(cone.begin(), cone.end());
      for (int v : cone)
        if (!std::binary_search(wall.begin(), wall.end(), v)) return v;
      throw error("fan not complete/regular");
    };
    Int sa = dot(h, fan.generators[opposite(cones[0])]);
    Int sb = dot(h, fan.generators[opposite(cones[1])]);
    if (sa == 0 || sb == 0 || (sa > 0) == (sb > 0)) throw error("fan not complete/regular");
  }
  return out;
}

bool subset_of_some_cone(const Fan& fan, const std::vector<int>& s) {
  for (auto cone : fan.max_cones) {
    std::sort(cone.begin(), cone.end());
    if (std::includes(cone.begin(), cone.end(), s.begin(), s.end())) return true;
  }
  return false;
}

}  // namespace

std::vector<PrimitiveRelation> fan_relations(const Fan& fan) {
  FanChecked checked = check_fan(fan);
  const int d = fan.dim;
  const int n = static_cast<int>(fan.generators.size());

  auto locate = [&](const IVec& point) -> std::pair<std::vector<int>, IVec> {
    if (is_zero(point)) return {{}, {}};
    for (std::size_t ci = 0; ci < fan.max_cones.size(); ++ci) {
      std::vector<int> cone = fan.max_cones[ci];
      std::sort(cone.begin(), cone.end());
      IntMatrix m = IntMatrix::from_columns([&] {
        std::vector<IVec> cols;
        for (int v : cone) cols.push_back(fan.generators[v]);
        return cols;
      }());
      IVec lambda = inverse_unimodular(m).apply(point);
      bool nonneg = true;
      for (const auto& l : lambda)
        if (l < 0) { nonneg = false; break; }
      if (!nonneg) continue;
      std::vector<int> support;
      IVec coeffs;
      for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] > 0) {
          support.push_back(cone[i]);
          coeffs.push_back(lambda[i]);
        }
      return {support, coeffs};
    }
    throw error("fan not complete/regular");
  };
  (void)checked;

  std::vector<PrimitiveRelation> out;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  // minimal non-faces of size 2..d+1
  std::vector<std::vector<int>> current;
  for (int k = 2; k <= d + 1; ++k) {
    std::vector<int> s(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == k) {
        std::vector<int> sub(s.begin(), s.end());
        if (subset_of_some_cone(fan, sub)) return;
        for (int skip = 0; skip < k; ++skip) {
          std::vector<int> proper;
          for (int i = 0; i < k; ++i)
            if (i != skip) proper.push_back(s[i]);
          if (!subset_of_some_cone(fan, proper)) return;  // not minimal
        }
        IVec sum(d, Int(0));
        for (int v : sub) sum = add(sum, fan.generators[v]);
        auto [support, coeffs] = locate(sum);
        PrimitiveRelation r;
        r.collection = sub;
        r.support = support;
        r.coeffs = coeffs;
        r.degree = Int(k);
        for (const auto& c : coeffs) r.degree -= c;
        out.push_back(std::move(r));
        return;
      }
      for (int v = start; v < n; ++v) {
        s[depth] = v;
        rec(v + 1, depth + 1);
      }
    };
    rec(0, 0);
  }
  return out;
}

Ampleness ampleness(const Fan& fan) {
  bool any_zero = false;
  for (const auto& r : fan_relations(fan)) {
    if (r.degree < 0) return Ampleness::not_nef;
    if (r.degree == 0) any_zero = true;
  }
  return any_zero ? Ampleness::nef_only : Ampleness::ample;
}

const char* to_string(Ampleness a) {
  switch (a) {
    case Ampleness::ample: return "ample";
    case Ampleness::nef_only: return "nef_only";
    default: return "not_nef";
  }
}

}  // namespace fano
