#include "fano/fan.hpp"
#include "fano/presentation.hpp"
#include "fano/relations.hpp"

#include <doctest.h>

#include <algorithm>
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

FanoPolytope p1xp3() {
  return FanoPolytope::validate(4, {iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), iv({0, 0, 1, 0}),
                                    iv({-1, -1, -1, 0}), iv({0, 0, 0, 1}), iv({0, 0, 0, -1})});
}

FanoPolytope b1() {
  return FanoPolytope::validate(4, {iv({-1, -1, -1, 3}), iv({1, 0, 0, 0}), iv({0, 1, 0, 0}),
                                    iv({0, 0, 1, 0}), iv({0, 0, 0, 1}), iv({0, 0, 0, -1})});
}

}  // namespace

TEST_CASE("face membership") {
  FanoPolytope p = p4();
  CHECK(p.is_face({0, 1, 2, 3}));
  CHECK(p.is_face({2}));
  CHECK_FALSE(p.is_face({0, 1, 2, 3, 4}));
  FanoPolytope b4 = p1xp3();
  CHECK_FALSE(b4.is_face({4, 5}));
  CHECK_THROWS_AS(p.is_face({7}), error);
}

TEST_CASE("primitive collections") {
  auto cols4 = primitive_collections(p4());
  REQUIRE(cols4.size() == 1);
  CHECK(cols4[0] == std::vector<int>{0, 1, 2, 3, 4});

  auto colsb4 = primitive_collections(p1xp3());
  REQUIRE(colsb4.size() == 2);
  std::set<std::vector<int>> s(colsb4.begin(), colsb4.end());
  CHECK(s.count({0, 1, 2, 3}) == 1);
  CHECK(s.count({4, 5}) == 1);

  auto colsc = primitive_collections(cross4());
  CHECK(colsc.size() == 4);
  for (const auto& c : colsc) CHECK(c.size() == 2);
}

TEST_CASE("point location in the face fan") {
  FanoPolytope p = p4();
  auto [sup1, c1] = p.locate(iv({1, 1, 0, 0}));
  CHECK(sup1 == std::vector<int>{0, 1});
  CHECK(c1 == IVec{Int(1), Int(1)});
  auto [sup0, c0] = p.locate(iv({0, 0, 0, 0}));
  CHECK(sup0.empty());

  FanoPolytope b = b1();
  auto [sup, c] = b.locate(iv({0, 0, 0, 3}));
  CHECK(sup == std::vector<int>{4});
  CHECK(c == IVec{Int(3)});
}

TEST_CASE("primitive relations with degrees") {
  FanoPolytope b = b1();
  REQUIRE(b.relations().size() == 2);
  for (const auto& r : b.relations()) {
    if (r.collection == std::vector<int>{0, 1, 2, 3}) {
      CHECK(r.support == std::vector<int>{4});
      CHECK(r.coeffs == IVec{Int(3)});
      CHECK(r.degree == 1);
    } else {
      CHECK(r.collection == std::vector<int>{4, 5});
      CHECK(r.support.empty());
      CHECK(r.degree == 2);
    }
  }

  // C3 type: v1+v2+v3 = 0 and v4+v5+v6 = v1+v2
  Presentation c3;
  c3.n = 6;
  c3.dim = 4;
  c3.collections = {{{0, 1, 2}, {}}, {{3, 4, 5}, {{0, Int(1)}, {1, Int(1)}}}};
  FanoPolytope pc3 = reconstruct(c3);
  bool found = false;
  for (const auto& r : pc3.relations()) {
    if (r.collection == std::vector<int>{3, 4, 5}) {
      CHECK(r.support == std::vector<int>{0, 1});
      CHECK(r.coeffs == IVec{Int(1), Int(1)});
      CHECK(r.degree == 1);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("ampleness of fans") {
  CHECK(ampleness(Fan::from_polytope(p4())) == Ampleness::ample);
  CHECK(ampleness(Fan::from_polytope(b1())) == Ampleness::ample);

  // the non-Fano nef 3-fold family on the c1 combinatorial type:
  // n6+n3 = n1+n2, n1+n2+n5 = n6, n1+n2+n4 = lambda n3
  for (int lambda : {0, 1, 2}) {
    Fan fan;
    fan.dim = 3;
    fan.generators = {iv({1, 0, 0}),         iv({0, 1, 0}), iv({0, 0, -1}),
                      iv({-1, -1, -lambda}), iv({0, 0, 1}), iv({1, 1, 1})};
    fan.max_cones = {{1, 5, 4}, {1, 4, 3}, {1, 3, 2}, {0, 5, 4},
                     {0, 4, 3}, {0, 3, 2}, {0, 1, 5}, {0, 1, 2}};
    CHECK(ampleness(fan) == Ampleness::nef_only);
  }

  // Hirzebruch F3: relation e1 + (-e1+3e2) = 3 e2 has degree -1
  Fan f3;
  f3.dim = 2;
  f3.generators = {iv({1, 0}), iv({0, 1}), iv({-1, 3}), iv({0, -1})};
  f3.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  CHECK(ampleness(f3) == Ampleness::not_nef);

  Fan bad;
  bad.dim = 2;
  bad.generators = {iv({1, 0}), iv({0, 1}), iv({-1, -1})};
  bad.max_cones = {{0, 1}, {1, 2}};  // not complete
  CHECK_THROWS_AS(ampleness(bad), error);
}

TEST_CASE("relation lattice and generation") {
  auto rl4 = relation_lattice(p4());
  CHECK(rl4.basis.rows() == 1);
  CHECK(rl4.generated_by_primitive_relations);

  auto rlb4 = relation_lattice(p1xp3());
  CHECK(rlb4.basis.rows() == 2);
  CHECK(rlb4.generated_by_primitive_relations);

  CHECK(relation_lattice(b1()).generated_by_primitive_relations);
  CHECK(relation_lattice(cross4()).generated_by_primitive_relations);
}

TEST_CASE("extremal rays") {
  CHECK(extremal_rays(p4()).size() == 1);
  CHECK(extremal_rays(p1xp3()).size() == 2);
  // degree-1 relations are always extremal
  FanoPolytope b = b1();
  auto ext = extremal_rays(b);
  for (const auto& r : b.relations())
    if (r.degree == 1) {
      bool present = false;
      for (const auto& e : ext)
        if (e == r) present = true;
      CHECK(present);
    }
}

TEST_CASE("normal bundle types") {
  FanoPolytope b = b1();
  for (const auto& r : b.relations()) {
    auto nb = normal_bundle_type(b, r);
    if (r.collection.size() == 4) {
      CHECK(nb.degrees == std::vector<Int>{Int(1), Int(1), Int(-3)});
      CHECK(nb.anticanonical_degree == 1);
    } else {
      CHECK(nb.degrees == std::vector<Int>{Int(0), Int(0), Int(0)});
      CHECK(nb.anticanonical_degree == 2);
    }
  }

  // B5: v5+v6 = v1 gives type {0,0,-1} with degree 1
  Presentation b5;
  b5.n = 6;
  b5.dim = 4;
  b5.collections = {{{0, 1, 2, 3}, {}}, {{4, 5}, {{0, Int(1)}}}};
  FanoPolytope pb5 = reconstruct(b5);
  for (const auto& r : pb5.relations())
    if (r.collection.size() == 2) {
      auto nb = normal_bundle_type(pb5, r);
      CHECK(nb.degrees == std::vector<Int>{Int(0), Int(0), Int(-1)});
      CHECK(nb.anticanonical_degree == 1);
    }
}

TEST_CASE("wall relations") {
  FanoPolytope p = p4();
  WallData w = wall_relation(p, {0, 1, 2});
  CHECK(w.x == IVec{Int(1), Int(1), Int(1)});
  CHECK(w.normal_degree == 3);
  CHECK(w.anticanonical_degree == 5);

  FanoPolytope c = cross4();
  auto walls = all_walls(c);
  CHECK(walls.size() == 32);
  for (const auto& wd : walls) {
    CHECK(wd.normal_degree == 0);
    CHECK(wd.anticanonical_degree == 2);
  }

  FanoPolytope b4 = p1xp3();
  WallData wb = wall_relation(b4, {0, 1, 4});
  CHECK(wb.normal_degree == 2);
  CHECK(wb.anticanonical_degree == 4);
  IVec x_sorted = wb.x;
  std::sort(x_sorted.begin(), x_sorted.end());
  CHECK(x_sorted == IVec{Int(0), Int(1), Int(1)});

  CHECK_THROWS_AS(wall_relation(b4, {0, 4, 5}), error);
}

TEST_CASE("total weight") {
  CHECK(total_weight(p4()) == 30);
  CHECK(total_weight(cross4()) == 0);
  FanoPolytope seg = FanoPolytope::validate(1, {iv({1}), iv({-1})});
  CHECK_THROWS_AS(total_weight(seg), dimension_error);
}

TEST_CASE("valence") {
  FanoPolytope p = p4();
  for (int i = 0; i < 5; ++i) CHECK(p.valence(i) == 4);
  FanoPolytope c = cross4();
  for (int i = 0; i < 8; ++i) CHECK(c.valence(i) == 6);
  CHECK(p1xp3().valence(4) == 4);
}

TEST_CASE("walls lie in the Mori cone") {
  for (const FanoPolytope& p : {p4(), cross4(), p1xp3(), b1()})
    for (const auto& w : all_walls(p)) CHECK(wall_in_mori_cone(p, w));
}
