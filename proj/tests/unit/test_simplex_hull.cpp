#include "fano/hull.hpp"
#include "fano/simplex.hpp"

#include <doctest.h>

using namespace fano;

namespace {

IVec iv(std::initializer_list<int> xs) {
  IVec v;
  for (int x : xs) v.push_back(x);
  return v;
}

}  // namespace

TEST_CASE("cone membership") {
  std::vector<IVec> gens = {iv({1, 0}), iv({0, 1})};
  CHECK(cone_member(iv({3, 2}), gens));
  CHECK(cone_member(iv({0, 0}), gens));
  CHECK_FALSE(cone_member(iv({-1, 0}), gens));
  CHECK_FALSE(cone_member(iv({1, -1}), gens));

  // cone spanned by (1,2) and (2,1): (1,1) inside, (1,3) outside
  std::vector<IVec> slanted = {iv({1, 2}), iv({2, 1})};
  CHECK(cone_member(iv({1, 1}), slanted));
  CHECK(cone_member(iv({3, 3}), slanted));
  CHECK_FALSE(cone_member(iv({1, 3}), slanted));
  CHECK_FALSE(cone_member(iv({0, 1}), slanted));
}

TEST_CASE("convex membership") {
  std::vector<IVec> square = {iv({1, 1}), iv({1, -1}), iv({-1, 1}), iv({-1, -1})};
  CHECK(convex_member(iv({0, 0}), square));
  CHECK(convex_member(iv({1, 0}), square));
  CHECK(convex_member(iv({1, 1}), square));
  CHECK_FALSE(convex_member(iv({2, 0}), square));
}

TEST_CASE("hull scan on the cross-polytope") {
  std::vector<IVec> pts = {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})};
  Hull h = hull_scan(2, pts);
  CHECK(h.facets.size() == 4);
  CHECK(h.vertices.size() == 4);
  for (const auto& f : h.facets) CHECK(f.level == 1);
  CHECK(hull_closed(h));
}

TEST_CASE("hull scan merges coplanar points") {
  // square facet plus apexes: octahedron-like with one quad face
  std::vector<IVec> pts = {iv({1, 1, 1}),  iv({1, -1, 1}), iv({-1, 1, 1}), iv({-1, -1, 1}),
                           iv({0, 0, -1})};
  Hull h = hull_scan(3, pts);
  bool found_quad = false;
  for (const auto& f : h.facets)
    if (f.corners.size() == 4) found_quad = true;
  CHECK(found_quad);
}

TEST_CASE("hull scan rejections") {
  CHECK_THROWS_WITH_AS(hull_scan(2, {iv({1, 0}), iv({-1, 0}), iv({2, 0})}),
                       "not full-dimensional", error);
  CHECK_THROWS_WITH_AS(hull_scan(2, {iv({1, 0}), iv({0, 1}), iv({1, 1})}),
                       "origin not interior", error);
  CHECK_THROWS_AS(hull_scan(2, {iv({1, 0}), iv({0, 1})}), error);
}

TEST_CASE("hull scan finds interior points as non-vertices") {
  std::vector<IVec> pts = {iv({2, 0}), iv({0, 2}), iv({-2, -2}), iv({0, 0}), iv({1, 1})};
  Hull h = hull_scan(2, pts);
  CHECK(h.vertices == std::vector<int>{0, 1, 2});
}
