#pragma once

#include "fano/arith.hpp"

#include <cstddef>
#include <initializer_list>

namespace fano {

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// Immutable by convention once handed out of a constructor function;
/// mutating access exists for the algorithms in linalg.cpp.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw dimension_error("IntMatrix: ragged initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static IntMatrix from_columns(const std::vector<IVec>& cols) {
    if (cols.empty()) return IntMatrix();
    IntMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw dimension_error("from_columns: ragged input");
      for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  static IntMatrix from_rows(const std::vector<IVec>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw dimension_error("from_rows: ragged input");
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) {
    check(r, c);
    return data_[r * cols_ + c];
  }
  const Int& at(std::size_t r, std::size_t c) const {
    check(r, c);
    return data_[r * cols_ + c];
  }

  IVec row(std::size_t r) const {
    check(r, 0);
    return IVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  IVec col(std::size_t c) const {
    if (c >= cols_) throw dimension_error("IntMatrix: column out of range");
    IVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = data_[i * cols_ + c];
    return v;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw dimension_error("IntMatrix: product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }

  IVec apply(const IVec& v) const {
    if (v.size() != cols_) throw dimension_error("IntMatrix: apply shape mismatch");
    IVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  /// Flattened lexicographic comparison, rows major; used by canonical forms.
  bool lex_less(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw dimension_error("lex_less: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) {
      if (data_[i] != o.data_[i]) return data_[i] < o.data_[i];
    }
    return false;
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw dimension_error("IntMatrix: index out of range");
  }

  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

}  // namespace fano
