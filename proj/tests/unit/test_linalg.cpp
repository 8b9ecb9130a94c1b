#include "fano/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace fano;

namespace {

bool is_hnf(const IntMatrix& h) {
  // pivots positive and strictly right-moving, entries above pivots in [0, pivot)
  std::size_t last_col = 0;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t c = 0;
    while (c < h.cols() && h.at(i, c) == 0) ++c;
    if (c == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (i > 0 && c <= last_col) return false;
    if (h.at(i, c) <= 0) return false;
    for (std::size_t r = 0; r < i; ++r)
      if (h.at(r, c) < 0 || h.at(r, c) >= h.at(i, c)) return false;
    last_col = c;
  }
  return true;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  IntMatrix m(rows, cols);
  std::uniform_int_distribution<int> d(-bound, bound);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("determinant basics") {
  CHECK(det(IntMatrix::identity(4)) == 1);
  CHECK(det(IntMatrix{{1, 2}, {3, 4}}) == -2);
  // facet matrix of the B1 polytope, expanded by hand
  IntMatrix b1{{-1, -1, -1, 3}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
  CHECK(det(b1) == -1);
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), dimension_error);
}

TEST_CASE("hnf examples and contract") {
  auto [h1, u1] = hnf(IntMatrix{{2, 0}, {0, 3}});
  CHECK(h1 == IntMatrix{{2, 0}, {0, 3}});
  CHECK(u1 == IntMatrix::identity(2));

  auto [h2, u2] = hnf(IntMatrix{{0, 1}, {1, 0}});
  CHECK(h2 == IntMatrix::identity(2));

  IntMatrix m{{2, 4}, {1, 3}};
  auto [h3, u3] = hnf(m);
  CHECK(u3 * m == h3);
  Int du = det(u3);
  CHECK((du == 1 || du == -1));
  CHECK(is_hnf(h3));
  // reduced row-style normal form of this matrix
  CHECK(h3 == IntMatrix{{1, 1}, {0, 2}});
}

TEST_CASE("hnf randomized re-multiplication") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial / 3) % 5;
    IntMatrix m = random_matrix(rng, r, c, 6);
    auto [h, u] = hnf(m);
    CHECK(u * m == h);
    Int du = det(u);
    CHECK((du == 1 || du == -1));
    CHECK(is_hnf(h));
  }
}

TEST_CASE("snf examples and contract") {
  auto r1 = snf(IntMatrix::identity(3));
  CHECK(r1.s == IntMatrix::identity(3));

  auto r2 = snf(IntMatrix{{2, 0}, {0, 3}});
  CHECK(r2.s == IntMatrix{{1, 0}, {0, 6}});
  CHECK(r2.u * IntMatrix{{2, 0}, {0, 3}} * r2.v == r2.s);

  auto r3 = snf(IntMatrix(2, 2));
  CHECK(r3.s == IntMatrix(2, 2));
}

TEST_CASE("snf randomized divisibility chain") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 2) % 4;
    IntMatrix m = random_matrix(rng, r, c, 5);
    auto res = snf(m);
    CHECK(res.u * m * res.v == res.s);
    Int du = det(res.u), dv = det(res.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (std::size_t i = 0; i < std::min(r, c); ++i) {
      for (std::size_t j = 0; j < std::min(r, c); ++j)
        if (i != j) CHECK(res.s.at(i, j) == 0);
      if (i + 1 < std::min(r, c) && res.s.at(i, i) != 0)
        CHECK(res.s.at(i + 1, i + 1) % res.s.at(i, i) == 0);
      if (res.s.at(i, i) == 0 && i + 1 < std::min(r, c)) CHECK(res.s.at(i + 1, i + 1) == 0);
    }
  }
}

TEST_CASE("solve_rational") {
  auto x1 = solve_rational(IntMatrix::identity(2), {Int(5), Int(7)});
  REQUIRE(x1.has_value());
  CHECK((*x1)[0] == 5);
  CHECK((*x1)[1] == 7);

  auto x2 = solve_rational(IntMatrix{{2, 0}, {0, 2}}, {Int(1), Int(1)});
  REQUIRE(x2.has_value());
  CHECK((*x2)[0] == Rat(1, 2));
  CHECK((*x2)[1] == Rat(1, 2));

  auto x3 = solve_rational(IntMatrix{{1, 1}, {1, -1}}, {Int(2), Int(0)});
  REQUIRE(x3.has_value());
  CHECK((*x3)[0] == 1);
  CHECK((*x3)[1] == 1);

  // singular inconsistent -> none
  CHECK_FALSE(solve_rational(IntMatrix{{1, 1}, {1, 1}}, {Int(0), Int(1)}).has_value());
  // singular consistent (underdetermined) -> error
  CHECK_THROWS_AS(solve_rational(IntMatrix{{1, 1}, {1, 1}}, {Int(1), Int(1)}), error);
}

TEST_CASE("kernel basis spans the full kernel lattice") {
  IntMatrix m{{1, 1, 1, 1, 1}};  // vertex matrix pattern of the P^4 simplex rows
  IntMatrix k = kernel_basis(m);
  CHECK(k.rows() == 4);
  for (std::size_t i = 0; i < k.rows(); ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < k.cols(); ++j) s += k.at(i, j);
    CHECK(s == 0);
  }
  // saturation: SNF of the basis matrix has unit elementary divisors
  auto res = snf(k);
  for (std::size_t i = 0; i < 4; ++i) CHECK(res.s.at(i, i) == 1);
}

TEST_CASE("quotient_projection") {
  IntMatrix q1 = quotient_projection({Int(1), Int(0)});
  CHECK(q1.rows() == 1);
  CHECK(q1.apply({Int(1), Int(0)}) == IVec{Int(0)});
  CHECK(q1 == IntMatrix{{0, 1}});

  IntMatrix q2 = quotient_projection({Int(1), Int(1)});
  CHECK(q2.apply({Int(1), Int(1)}) == IVec{Int(0)});
  auto s = snf(q2);
  CHECK(s.s.at(0, 0) == 1);

  CHECK_THROWS_AS(quotient_projection({Int(2), Int(4)}), error);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    IVec v(4);
    for (auto& x : v) x = d(rng);
    if (!is_primitive(v)) continue;
    IntMatrix q = quotient_projection(v);
    CHECK(is_zero(q.apply(v)));
    auto sn = snf(q);
    for (std::size_t i = 0; i < 3; ++i) CHECK(sn.s.at(i, i) == 1);
  }
}
