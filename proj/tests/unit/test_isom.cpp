#include "fano/isom.hpp"
#include "fano/presentation.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace fano;

namespace {

IVec iv(std::initializer_list<int> xs) {
  IVec v;
  for (int x : xs) v.push_back(x);
  return v;
}

FanoPolytope p4() {
  return FanoPolytope::validate(4, {iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), iv({0, 0, 1, 0}),
                                    iv({0, 0, 0, 1}), iv({-1, -1, -1, -1})});
}

IntMatrix random_unimodular(std::mt19937_64& rng, int d) {
  IntMatrix m = IntMatrix::identity(d);
  std::uniform_int_distribution<int> pick(0, d - 1), coef(-2, 2), op(0, 2);
  for (int steps = 0; steps < 12; ++steps) {
    int i = pick(rng), j = pick(rng);
    switch (op(rng)) {
      case 0: {  // row_i += c * row_j
        if (i == j) break;
        Int c = coef(rng);
        for (int k = 0; k < d; ++k) m.at(i, k) += c * m.at(j, k);
        break;
      }
      case 1:  // swap rows
        for (int k = 0; k < d; ++k) std::swap(m.at(i, k), m.at(j, k));
        break;
      default:  // negate a row
        for (int k = 0; k < d; ++k) m.at(i, k) = -m.at(i, k);
    }
  }
  return m;
}

FanoPolytope transformed(const FanoPolytope& p, const IntMatrix& a) {
  std::vector<IVec> verts;
  for (const auto& v : p.vertices()) verts.push_back(a.apply(v));
  return FanoPolytope::validate(p.dim(), verts);
}

std::vector<FanoPolytope> del_pezzo_polygons() {
  std::vector<FanoPolytope> out;
  out.push_back(FanoPolytope::validate(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}));
  out.push_back(FanoPolytope::validate(2, {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})}));
  out.push_back(FanoPolytope::validate(2, {iv({1, 0}), iv({0, 1}), iv({1, 1}), iv({-1, -1})}));
  out.push_back(
      FanoPolytope::validate(2, {iv({1, 0}), iv({0, 1}), iv({1, 1}), iv({-1, 0}), iv({-1, -1})}));
  out.push_back(FanoPolytope::validate(
      2, {iv({1, 0}), iv({1, 1}), iv({0, 1}), iv({-1, 0}), iv({-1, -1}), iv({0, -1})}));
  return out;
}

Presentation presentation_b4() {
  Presentation b4;
  b4.n = 6;
  b4.dim = 4;
  b4.collections = {{{0, 1, 2, 3}, {}}, {{4, 5}, {}}};
  return b4;
}

Presentation presentation_b5() {
  Presentation b5;
  b5.n = 6;
  b5.dim = 4;
  b5.collections = {{{0, 1, 2, 3}, {}}, {{4, 5}, {{0, Int(1)}}}};
  return b5;
}

}  // namespace

TEST_CASE("isomorphism recovers unimodular images") {
  std::mt19937_64 rng(2024);
  FanoPolytope p = p4();
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix a = random_unimodular(rng, 4);
    FanoPolytope q = transformed(p, a);
    auto m = are_isomorphic(p, q);
    REQUIRE(m.has_value());
    // the returned map carries vertices onto vertices
    std::set<IVec> target(q.vertices().begin(), q.vertices().end());
    for (const auto& v : p.vertices()) CHECK(target.count(m->apply(v)) == 1);
  }
}

TEST_CASE("B4 and B5 are combinatorially equivalent but not isomorphic") {
  FanoPolytope b4 = reconstruct(presentation_b4());
  FanoPolytope b5 = reconstruct(presentation_b5());
  CHECK_FALSE(are_isomorphic(b4, b5).has_value());
  CHECK_FALSE(are_isomorphic(b5, b4).has_value());
  auto bij = comb_equivalent(b4, b5);
  REQUIRE(bij.has_value());
  CHECK(comb_equivalent(b5, b4).has_value());
  CHECK(canonical_form(b4).digest != canonical_form(b5).digest);
}

TEST_CASE("permuted coordinates stay isomorphic") {
  FanoPolytope p = p4();
  std::vector<IVec> perm;
  for (const auto& v : p.vertices()) {
    IVec w = {v[3], v[0], v[2], v[1]};
    perm.push_back(w);
  }
  FanoPolytope q = FanoPolytope::validate(4, perm);
  CHECK(are_isomorphic(p, q).has_value());
  CHECK(canonical_form(p) == canonical_form(q));
}

TEST_CASE("canonical form is a unimodular invariant") {
  std::mt19937_64 rng(99);
  for (const auto& p : del_pezzo_polygons()) {
    CanonicalForm base = canonical_form(p);
    for (int trial = 0; trial < 50; ++trial) {
      FanoPolytope q = transformed(p, random_unimodular(rng, 2));
      CHECK(canonical_form(q) == base);
    }
  }
}

TEST_CASE("the five del Pezzo polygons have distinct forms") {
  std::set<std::string> digests;
  for (const auto& p : del_pezzo_polygons()) digests.insert(canonical_form(p).digest);
  CHECK(digests.size() == 5);
}

TEST_CASE("combinatorial equivalence identity and size mismatch") {
  FanoPolytope p = p4();
  auto self_map = comb_equivalent(p, p);
  REQUIRE(self_map.has_value());
  FanoPolytope seg = FanoPolytope::validate(1, {iv({1}), iv({-1})});
  CHECK_FALSE(comb_equivalent(p, seg).has_value());
}
