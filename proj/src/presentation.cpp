#include "fano/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fano {

namespace {

std::string relation_text(const PresentationRelation& r) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < r.members.size(); ++i)
    os << (i ? "," : "") << r.members[i] + 1;
  os << "} -> {";
  bool first = true;
  for (const auto& [k, c] : r.target) {
    os << (first ? "" : ",") << k + 1 << ":" << c.str();
    first = false;
  }
  os << "}";
  return os.str();
}

void check_well_formed(const Presentation& pres) {
  if (pres.n < pres.dim + 1 || pres.dim < 1)
    throw reconstruction_error("inconsistent presentation: bad sizes");
  for (const auto& r : pres.collections) {
    if (r.members.size() < 2)
      throw reconstruction_error("inconsistent presentation: collection smaller than 2");
    if (!std::is_sorted(r.members.begin(), r.members.end()) ||
        std::adjacent_find(r.members.begin(), r.members.end()) != r.members.end())
      throw reconstruction_error("inconsistent presentation: unsorted or repeated members");
    for (int v : r.members)
      if (v < 0 || v >= pres.n)
        throw reconstruction_error("inconsistent presentation: member index out of range");
    for (const auto& [k, c] : r.target) {
      if (k < 0 || k >= pres.n)
        throw reconstruction_error("inconsistent presentation: target index out of range");
      if (c < 1) throw reconstruction_error("inconsistent presentation: nonpositive coefficient");
      if (std::binary_search(r.members.begin(), r.members.end(), k))
        throw reconstruction_error("inconsistent presentation: target meets members");
    }
  }
}

}  // namespace

FanoPolytope reconstruct(const Presentation& pres) {
  check_well_formed(pres);
  const int n = pres.n, d = pres.dim;

  // lexicographically first d-subset containing no collection
  std::vector<int> face;
  {
    std::vector<int> s(d);
    for (int i = 0; i < d; ++i) s[i] = i;
    while (true) {
      bool ok = true;
      for (const auto& r : pres.collections) {
        if (std::includes(s.begin(), s.end(), r.members.begin(), r.members.end())) {
          ok = false;
          break;
        }
      }
      if (ok) { face = s; break; }
      int i = d - 1;
      while (i >= 0 && s[i] == n - d + i) --i;
      if (i < 0) break;
      ++s[i];
      for (int j = i + 1; j < d; ++j) s[j] = s[j - 1] + 1;
    }
    if (face.empty())
      throw reconstruction_error("inconsistent presentation: no d-subset face");
  }

  // relation rows over all n vertices
  const std::size_t m = pres.collections.size();
  std::vector<IVec> coef(m, IVec(n, Int(0)));
  for (std::size_t r = 0; r < m; ++r) {
    for (int v : pres.collections[r].members) coef[r][v] += 1;
    for (const auto& [k, c] : pres.collections[r].target) coef[r][k] -= c;
  }

  std::vector<int> unknown;
  std::vector<int> pos_in_face(n, -1);
  for (int i = 0; i < d; ++i) pos_in_face[face[i]] = i;
  for (int v = 0; v < n; ++v)
    if (pos_in_face[v] < 0) unknown.push_back(v);
  const std::size_t u = unknown.size();

  IntMatrix a(m, u);
  IntMatrix rhs(m, d);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < u; ++j) a.at(r, j) = coef[r][unknown[j]];
    for (int t = 0; t < d; ++t) rhs.at(r, t) = -coef[r][face[t]];
  }

  auto res = hnf(a);
  std::size_t rank_a = 0;
  for (std::size_t i = 0; i < res.h.rows(); ++i)
    for (std::size_t j = 0; j < res.h.cols(); ++j)
      if (res.h.at(i, j) != 0) { ++rank_a; break; }
  if (rank_a != u)
    throw reconstruction_error("inconsistent presentation: relations do not determine the vertices");

  IntMatrix rhs2 = res.u * rhs;
  for (std::size_t i = u; i < m; ++i)
    for (int t = 0; t < d; ++t)
      if (rhs2.at(i, t) != 0)
        throw reconstruction_error("inconsistent presentation: incompatible relations");

  // back-substitute the triangular top block
  IntMatrix x(u, d);
  for (std::size_t i = u; i-- > 0;) {
    for (int t = 0; t < d; ++t) {
      Int acc = rhs2.at(i, t);
      for (std::size_t j = i + 1; j < u; ++j) acc -= res.h.at(i, j) * x.at(j, t);
      if (acc % res.h.at(i, i) != 0)
        throw reconstruction_error("inconsistent presentation: non-integral solution");
      x.at(i, t) = acc / res.h.at(i, i);
    }
  }

  std::vector<IVec> verts(n, IVec(d, Int(0)));
  for (int i = 0; i < d; ++i) verts[face[i]][i] = 1;
  for (std::size_t j = 0; j < u; ++j)
    for (int t = 0; t < d; ++t) verts[unknown[j]][t] = x.at(j, t);

  FanoPolytope p = [&] {
    try {
      return FanoPolytope::validate(d, verts);
    } catch (const validation_error& e) {
      throw reconstruction_error(std::string("inconsistent presentation: ") + e.what());
    }
  }();

  // recomputed relations must equal the presentation exactly
  auto found = presentation_of(p);
  auto normalize = [](const Presentation& q) {
    std::set<std::string> s;
    for (const auto& r : q.collections) s.insert(relation_text(r));
    return s;
  };
  auto sp = normalize(pres), sf = normalize(found);
  if (sp != sf) {
    for (const auto& r : sf)
      if (!sp.count(r))
        throw reconstruction_error("presentation mismatch: polytope has relation " + r +
                                   " absent from the input");
    for (const auto& r : sp)
      if (!sf.count(r))
        throw reconstruction_error("presentation mismatch: input relation " + r +
                                   " not realized by the polytope");
  }
  return p;
}

Presentation presentation_of(const FanoPolytope& p) {
  Presentation pres;
  pres.n = p.size();
  pres.dim = p.dim();
  for (const auto& r : p.relations()) {
    PresentationRelation pr;
    pr.members = r.collection;
    for (std::size_t i = 0; i < r.support.size(); ++i) pr.target[r.support[i]] = r.coeffs[i];
    pres.collections.push_back(std::move(pr));
  }
  return pres;
}

FanoPolytope direct_sum(const FanoPolytope& a, const FanoPolytope& b) {
  const int d = a.dim() + b.dim();
  std::vector<IVec> verts;
  for (const auto& v : a.vertices()) {
    IVec w(d, Int(0));
    for (int i = 0; i < a.dim(); ++i) w[i] = v[i];
    verts.push_back(std::move(w));
  }
  for (const auto& v : b.vertices()) {
    IVec w(d, Int(0));
    for (int i = 0; i < b.dim(); ++i) w[a.dim() + i] = v[i];
    verts.push_back(std::move(w));
  }
  try {
    return FanoPolytope::validate(d, verts);
  } catch (const validation_error& e) {
    throw error(std::string("direct_sum: free sum of Fano polytopes failed validation: ") + e.what());
  }
}

}  // namespace fano
