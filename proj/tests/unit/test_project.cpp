#include "fano/isom.hpp"
#include "fano/project.hpp"

#include <doctest.h>

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

FanoPolytope cross4() {
  std::vector<IVec> pts;
  for (int i = 0; i < 4; ++i)
    for (int s : {1, -1}) {
      IVec v(4, Int(0));
      v[i] = s;
      pts.push_back(v);
    }
  return FanoPolytope::validate(4, pts);
}

FanoPolytope s1_polygon() {
  return FanoPolytope::validate(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1}), iv({1, 1})});
}

}  // namespace

TEST_CASE("projection of the simplex is the P^3 simplex") {
  FanoPolytope p = p4();
  Projection pr = project(p, 4);
  CHECK(pr.double_points.empty());
  FanoPolytope pi = FanoPolytope::validate(3, pr.pi_vertices());
  FanoPolytope p3 = FanoPolytope::validate(
      3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({-1, -1, -1})});
  CHECK(are_isomorphic(pi, p3).has_value());
}

TEST_CASE("double point of the S1 polygon resolves to its link") {
  FanoPolytope p = s1_polygon();
  Projection pr = project(p, 0);
  REQUIRE(pr.double_points.size() == 1);
  const auto& dp = pr.double_points[0];
  CHECK(((dp.pre_j == 1 && dp.pre_k == 3) || (dp.pre_j == 3 && dp.pre_k == 1)));
  // e1 + e2 = (1,1): the relation v1 + v2 = v4 makes v4 = (1,1) the link of e2
  CHECK(dp.link == 3);
  CHECK(dp.base == 1);
}

TEST_CASE("an antipodal image is not a double point") {
  FanoPolytope c = cross4();
  Projection pr = project(c, 0);
  CHECK(pr.double_points.empty());
  CHECK(is_zero(pr.images[1]));
}

TEST_CASE("projections are reflexive") {
  FanoPolytope p = p4();
  for (int i = 0; i < p.size(); ++i) CHECK(check_reflexive_projection(p, i));
  FanoPolytope s = s1_polygon();
  for (int i = 0; i < s.size(); ++i) CHECK(check_reflexive_projection(s, i));
}

TEST_CASE("divisor Fano check") {
  FanoPolytope p = p4();
  for (int i = 0; i < p.size(); ++i) {
    auto chk = divisor_fano_check(p, i);
    REQUIRE(chk.min_collection_degree.has_value());
    CHECK(*chk.min_collection_degree == 5);
    CHECK(chk.projected_is_fano);
  }
}

TEST_CASE("classify 2-faces") {
  CHECK(classify_2face({iv({0, 0}), iv({1, 0}), iv({0, 1})}) == FaceType::F1);
  CHECK(classify_2face({iv({0, 0}), iv({2, 1}), iv({1, 2}), iv({1, 1})}) == FaceType::F2);
  CHECK(classify_2face({iv({0, 0}), iv({2, 0}), iv({1, 0}), iv({1, 1})}) == FaceType::F3);
  CHECK(classify_2face({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})}) == FaceType::F4);
  CHECK_THROWS_WITH_AS(classify_2face({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({5, 5})}),
                       "not a Prop 3.1 face", error);
  // embedded in 3-space
  CHECK(classify_2face({iv({0, 0, 1}), iv({1, 0, 1}), iv({0, 1, 1})}) == FaceType::F1);
}

TEST_CASE("face classification of a projection") {
  FanoPolytope c = cross4();
  Projection pr = project(c, 0);
  auto rep = classify_projection_faces(c, pr);
  CHECK(rep.f4_count == 0);
  for (auto t : rep.facet_types) CHECK(t == FaceType::F1);
}

TEST_CASE("f3 formula on the 4-cube fan") {
  FanoPolytope c = cross4();
  CHECK(f3_formula_check(c, 0, 1));
  CHECK(c.f_vector()[3] == 16);
  CHECK_THROWS_AS(f3_formula_check(c, 0, 2), error);
}

TEST_CASE("f3 formula on the symmetric 10-vertex polytope") {
  std::vector<IVec> pts;
  for (int i = 0; i < 4; ++i)
    for (int s : {1, -1}) {
      IVec v(4, Int(0));
      v[i] = s;
      pts.push_back(v);
    }
  pts.push_back(iv({1, 1, 1, 1}));
  pts.push_back(iv({-1, -1, -1, -1}));
  FanoPolytope p = FanoPolytope::validate(4, pts);
  CHECK(f3_formula_check(p, 0, 1));
  CHECK(f3_formula_check(p, 8, 9));
}
