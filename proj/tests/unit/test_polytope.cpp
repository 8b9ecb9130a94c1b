#include <set>
#include "fano/polytope.hpp"

#include <doctest.h>

using namespace fano;

namespace {

IVec iv(std::initializer_list<int> xs) {
  IVec v;
  for (int x : xs) v.push_back(x);
  return v;
}

std::vector<IVec> p4_simplex() {
  return {iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), iv({0, 0, 1, 0}), iv({0, 0, 0, 1}),
          iv({-1, -1, -1, -1})};
}

std::vector<IVec> cross4() {
  std::vector<IVec> pts;
  for (int i = 0; i < 4; ++i)
    for (int s : {1, -1}) {
      IVec v(4, Int(0));
      v[i] = s;
      pts.push_back(v);
    }
  return pts;
}

std::vector<IVec> p1xp3() {
  return {iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), iv({0, 0, 1, 0}), iv({-1, -1, -1, 0}),
          iv({0, 0, 0, 1}), iv({0, 0, 0, -1})};
}

}  // namespace

TEST_CASE("validate the P^4 simplex") {
  FanoPolytope p = FanoPolytope::validate(4, p4_simplex());
  CHECK(p.size() == 5);
  CHECK(p.facets().size() == 5);
  auto f = p.f_vector();
  CHECK(f[0] == 5);
  CHECK(f[1] == 10);
  CHECK(f[2] == 10);
  CHECK(f[3] == 5);
}

TEST_CASE("validate the del Pezzo pentagon with an extra hull vertex") {
  // {+-e1, +-e2, e1+e2}: (1,1) is a hull vertex and the pentagon validates
  std::vector<IVec> pts = {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1}), iv({1, 1})};
  FanoPolytope p = FanoPolytope::validate(2, pts);
  CHECK(p.size() == 5);
  CHECK(p.facets().size() == 5);
}

TEST_CASE("validate rejects degenerate input") {
  CHECK_THROWS_AS(FanoPolytope::validate(2, {iv({1, 0}), iv({-1, 0})}), validation_error);
  try {
    FanoPolytope::validate(2, {iv({1, 0}), iv({-1, 0}), iv({2, 0})});
  } catch (const validation_error& e) {
    CHECK(e.condition == "not-full-dimensional");
  }
  try {
    FanoPolytope::validate(2, {iv({1, 0}), iv({0, 1}), iv({1, 1})});
  } catch (const validation_error& e) {
    CHECK(e.condition == "origin-not-interior");
  }
  try {
    FanoPolytope::validate(2, {iv({1, 0}), iv({0, 1}), iv({1, 0}), iv({-1, -1})});
  } catch (const validation_error& e) {
    CHECK(e.condition == "duplicate-point");
  }
  // midpoint of an edge: a redundant non-vertex point
  try {
    FanoPolytope::validate(2, {iv({2, 0}), iv({0, 2}), iv({1, 1}), iv({-1, -1})});
  } catch (const validation_error& e) {
    CHECK(e.condition == "redundant-point");
  }
  // square: simplicial but a facet fails the determinant condition
  try {
    FanoPolytope::validate(2, {iv({1, 1}), iv({1, -1}), iv({-1, 1}), iv({-1, -1})});
  } catch (const validation_error& e) {
    CHECK(e.condition == "non-unimodular-facet");
  }
}

TEST_CASE("facet normals of the P^4 simplex") {
  Hull h = facets(4, p4_simplex());
  CHECK(h.facets.size() == 5);
  std::set<IVec> normals;
  for (const auto& f : h.facets) {
    CHECK(f.level == 1);
    normals.insert(f.normal);
  }
  CHECK(normals.count(iv({1, 1, 1, 1})) == 1);
  CHECK(normals.count(iv({-4, 1, 1, 1})) == 1);
  CHECK(normals.count(iv({1, -4, 1, 1})) == 1);
}

TEST_CASE("f-vectors") {
  FanoPolytope cross = FanoPolytope::validate(4, cross4());
  auto f = cross.f_vector();
  CHECK(f[0] == 8);
  CHECK(f[1] == 24);
  CHECK(f[2] == 32);
  CHECK(f[3] == 16);

  FanoPolytope b4 = FanoPolytope::validate(4, p1xp3());
  auto g = b4.f_vector();
  CHECK(g[0] == 6);
  CHECK(g[1] == 14);
}

TEST_CASE("reflexivity") {
  CHECK(is_reflexive(4, p4_simplex()));
  CHECK(is_reflexive(2, {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})}));
  CHECK_FALSE(is_reflexive(1, {iv({-1}), iv({2})}));
  CHECK(is_reflexive(1, {iv({-1}), iv({1})}));
}

TEST_CASE("dual polytope") {
  FanoPolytope p = FanoPolytope::validate(4, p4_simplex());
  RationalPolytope d = dual_polytope(p);
  CHECK(d.verts.size() == 5);
  std::set<RVec> vs(d.verts.begin(), d.verts.end());
  RVec ones(4, Rat(1));
  CHECK(vs.count(ones) == 1);

  // square is self-dual up to relabeling: dual vertices (+-1, +-1)
  FanoPolytope sq = FanoPolytope::validate(2, {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})});
  RationalPolytope dsq = dual_polytope(sq);
  CHECK(dsq.verts.size() == 4);
  for (const auto& v : dsq.verts)
    for (const auto& x : v) CHECK(boost::multiprecision::abs(x) == 1);

  FanoPolytope seg = FanoPolytope::validate(1, {iv({1}), iv({-1})});
  RationalPolytope dseg = dual_polytope(seg);
  CHECK(dseg.verts.size() == 2);
}

namespace {

// the unit square as an explicit rational polytope (0 is a corner, which the
// central triangulation handles since every cone from a boundary point of a
// convex body still covers it)
RationalPolytope unit_square() {
  RationalPolytope q;
  q.dim = 2;
  q.verts = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
  q.ineqs = {{iv({1, 0}), Rat(1)}, {iv({0, 1}), Rat(1)}, {iv({-1, 0}), Rat(0)}, {iv({0, -1}), Rat(0)}};
  q.faces = {{{0}, {1}, {2}, {3}}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}};
  return q;
}

}  // namespace

TEST_CASE("lattice point counts") {
  FanoPolytope p = FanoPolytope::validate(4, p4_simplex());
  CHECK(lattice_points(dual_polytope(p)).size() == 126);

  // B1: (-1,-1,-1,3), e1, e2, e3, e4, -e4
  FanoPolytope b1 = FanoPolytope::validate(
      4, {iv({-1, -1, -1, 3}), iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), iv({0, 0, 1, 0}),
          iv({0, 0, 0, 1}), iv({0, 0, 0, -1})});
  CHECK(lattice_points(dual_polytope(b1)).size() == 159);

  CHECK(lattice_points(unit_square()).size() == 4);
}

TEST_CASE("volumes") {
  FanoPolytope p = FanoPolytope::validate(4, p4_simplex());
  CHECK(volume(dual_polytope(p)) == Rat(625, 24));

  FanoPolytope cross = FanoPolytope::validate(4, cross4());
  CHECK(volume(dual_polytope(cross)) == 16);

  CHECK(volume(unit_square()) == 1);

  RationalPolytope degenerate;
  degenerate.dim = 2;
  degenerate.degenerate = true;
  CHECK(volume(degenerate) == 0);
}
