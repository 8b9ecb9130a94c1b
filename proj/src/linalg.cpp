#include "fano/linalg.hpp"

#include <algorithm>

namespace fano {

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw dimension_error("det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int denom = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = t / denom;  // Bareiss: division is exact
      }
      a.at(i, k) = 0;
    }
    denom = a.at(k, k);
  }
  Int d = a.at(n - 1, n - 1);
  return sgn > 0 ? d : Int(-d);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}

// row_i -= q * row_j
void axpy_row(IntMatrix& m, std::size_t i, std::size_t j, const Int& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) -= q * m.at(j, c);
}

// floor division, used so remainders land in [0, |b|)
Int fdiv(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(rows);
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // gcd-eliminate below pivot_row in this column
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = pivot_row; i < rows; ++i) {
        if (h.at(i, col) == 0) continue;
        if (best == rows || abs(h.at(i, col)) < abs(h.at(best, col))) best = i;
      }
      if (best == rows) break;  // column clear
      if (best != pivot_row) {
        swap_rows(h, pivot_row, best);
        swap_rows(u, pivot_row, best);
      }
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < rows; ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = fdiv(h.at(i, col), h.at(pivot_row, col));
        axpy_row(h, i, pivot_row, q);
        axpy_row(u, i, pivot_row, q);
        if (h.at(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h.at(pivot_row, col) == 0) continue;
    if (h.at(pivot_row, col) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int q = fdiv(h.at(i, col), h.at(pivot_row, col));
      axpy_row(h, i, pivot_row, q);
      axpy_row(u, i, pivot_row, q);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

SnfResult snf(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto swap_cols = [&](IntMatrix& mm, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < mm.rows(); ++r) std::swap(mm.at(r, i), mm.at(r, j));
  };
  auto axpy_col = [&](IntMatrix& mm, std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < mm.rows(); ++r) mm.at(r, i) -= q * mm.at(r, j);
  };

  const std::size_t t = std::min(rows, cols);
  for (std::size_t k = 0; k < t; ++k) {
    // move a minimal nonzero entry of the trailing block to (k,k), then clear row+column
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j) {
          if (s.at(i, j) == 0) continue;
          if (pi == rows || abs(s.at(i, j)) < abs(s.at(pi, pj))) { pi = i; pj = j; }
        }
      if (pi == rows) break;  // trailing block zero
      if (pi != k) { swap_rows(s, k, pi); swap_rows(u, k, pi); }
      if (pj != k) { swap_cols(s, k, pj); swap_cols(v, k, pj); }
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        Int q = fdiv(s.at(i, k), s.at(k, k));
        axpy_row(s, i, k, q);
        axpy_row(u, i, k, q);
        if (s.at(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        Int q = fdiv(s.at(k, j), s.at(k, k));
        axpy_col(s, j, k, q);
        axpy_col(v, j, k, q);
        if (s.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // enforce divisibility: s(k,k) must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i)
        for (std::size_t j = k + 1; j < cols && divides; ++j)
          if (s.at(i, j) % s.at(k, k) != 0) {
            // fold row i into row k and retry
            axpy_row(s, k, i, Int(-1));
            axpy_row(u, k, i, Int(-1));
            divides = false;
          }
      if (divides) break;
    }
    if (k < t && s.at(k, k) < 0) { negate_row(s, k); negate_row(u, k); }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

std::optional<RVec> solve_rational(const IntMatrix& a, const IVec& b) {
  if (a.rows() != a.cols()) throw dimension_error("solve_rational: matrix not square");
  const std::size_t n = a.rows();
  if (b.size() != n) throw dimension_error("solve_rational: rhs size mismatch");

  std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(a.at(i, j));
    w[i][n] = Rat(b[i]);
  }

  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && w[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(w[p], w[r]);
    Rat inv = w[r][c];
    for (std::size_t j = c; j <= n; ++j) w[r][j] /= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || w[i][c] == 0) continue;
      Rat f = w[i][c];
      for (std::size_t j = c; j <= n; ++j) w[i][j] -= f * w[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < n) {
    for (std::size_t i = r; i < n; ++i)
      if (w[i][n] != 0) return std::nullopt;  // inconsistent
    throw error("solve_rational: consistent underdetermined system");
  }
  RVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[pivot_col[i]] = w[i][n];
  return x;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  // Row-HNF of the transpose: rows of U matching zero rows of H span the kernel.
  auto res = hnf(m.transpose());
  std::vector<IVec> basis;
  for (std::size_t i = 0; i < res.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < res.h.cols(); ++j)
      if (res.h.at(i, j) != 0) { zero = false; break; }
    if (zero) basis.push_back(res.u.row(i));
  }
  return IntMatrix::from_rows(basis);
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  Int d = det(m);
  if (d != 1 && d != -1) throw error("inverse_unimodular: determinant not +-1");
  auto res = hnf(m);  // h == identity up to the reductions since |det| = 1
  // u * m = h with h unimodular upper triangular, diagonal all 1 => h == I
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (res.h.at(i, j) != (i == j ? 1 : 0)) throw error("inverse_unimodular: internal");
  return res.u;
}

IntMatrix quotient_projection(const IVec& v) {
  const std::size_t d = v.size();
  if (d < 2) throw dimension_error("quotient_projection: dimension must be >= 2");
  if (!is_primitive(v)) throw error("vertex not primitive");
  // U * v = e1 for unimodular U; the last d-1 rows of U annihilate v and
  // project onto a complement of Z<v>.
  IntMatrix col(d, 1);
  for (std::size_t i = 0; i < d; ++i) col.at(i, 0) = v[i];
  auto res = hnf(col);
  if (res.h.at(0, 0) != 1) throw error("quotient_projection: internal (gcd != 1)");
  IntMatrix q(d - 1, d);
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) q.at(i - 1, j) = res.u.at(i, j);
  return q;
}

std::size_t rank(const IntMatrix& m) {
  auto res = hnf(m);
  std::size_t r = 0;
  for (std::size_t i = 0; i < res.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < res.h.cols(); ++j)
      if (res.h.at(i, j) != 0) { zero = false; break; }
    if (!zero) ++r;
  }
  return r;
}

}  // namespace fano
