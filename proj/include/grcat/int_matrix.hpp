#pragma once

#include <initializer_list>
#include <vector>

#include "grcat/arith.hpp"

namespace grcat {

/// Dense matrix over Z with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("IntMatrix: ragged rows");
      std::size_t j = 0;
      for (long long v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const BigInt& aik = (*this)(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const BigInt& bkj = o(k, j);
          if (bkj != 0) r(i, j) += aik * bkj;
        }
      }
    return r;
  }

  bool is_zero() const {
    for (const BigInt& v : a_)
      if (v != 0) return false;
    return true;
  }

  /// Exact determinant by fraction-free (Bareiss) elimination; square only.
  BigInt determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix w = *this;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (w(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && w(p, k) == 0) ++p;
        if (p == n) return 0;
        for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
  }

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> a_;
};

}  // namespace grcat
