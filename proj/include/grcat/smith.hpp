#pragma once

#include <utility>

#include "grcat/int_matrix.hpp"

namespace grcat {

/// Smith normal form a = u * s * v with s diagonal, d1 | d2 | ... | dr >= 1
/// followed by zeros, and u, v unimodular. The direct transforms
/// left * a * right = s (left = u^{-1}, right = v^{-1}) are always produced;
/// u and v are tracked on request.
struct SnfDecomposition {
  IntMatrix s;
  IntMatrix left, right;
  IntMatrix u, v;
  std::size_t rank = 0;
};

inline SnfDecomposition smith_normal_form(const IntMatrix& a, bool with_uv = true) {
  const std::size_t m = a.rows(), n = a.cols();
  SnfDecomposition out;
  out.s = a;
  out.left = IntMatrix::identity(m);
  out.right = IntMatrix::identity(n);
  if (with_uv) {
    out.u = IntMatrix::identity(m);
    out.v = IntMatrix::identity(n);
  }
  IntMatrix& d = out.s;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(d(i, c), d(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(out.left(i, c), out.left(j, c));
    if (with_uv)
      for (std::size_t r = 0; r < m; ++r) std::swap(out.u(r, i), out.u(r, j));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(d(r, i), d(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(out.right(r, i), out.right(r, j));
    if (with_uv)
      for (std::size_t c = 0; c < n; ++c) std::swap(out.v(i, c), out.v(j, c));
  };
  // row i += f * row j
  auto add_row = [&](std::size_t i, std::size_t j, const BigInt& f) {
    for (std::size_t c = 0; c < n; ++c)
      if (d(j, c) != 0) d(i, c) += f * d(j, c);
    for (std::size_t c = 0; c < m; ++c)
      if (out.left(j, c) != 0) out.left(i, c) += f * out.left(j, c);
    if (with_uv)
      for (std::size_t r = 0; r < m; ++r)
        if (out.u(r, i) != 0) out.u(r, j) -= f * out.u(r, i);
  };
  // col j += f * col i
  auto add_col = [&](std::size_t j, std::size_t i, const BigInt& f) {
    for (std::size_t r = 0; r < m; ++r)
      if (d(r, i) != 0) d(r, j) += f * d(r, i);
    for (std::size_t r = 0; r < n; ++r)
      if (out.right(r, i) != 0) out.right(r, j) += f * out.right(r, i);
    if (with_uv)
      for (std::size_t c = 0; c < n; ++c)
        if (out.v(j, c) != 0) out.v(i, c) -= f * out.v(j, c);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t c = 0; c < n; ++c) d(i, c) = -d(i, c);
    for (std::size_t c = 0; c < m; ++c) out.left(i, c) = -out.left(i, c);
    if (with_uv)
      for (std::size_t r = 0; r < m; ++r) out.u(r, i) = -out.u(r, i);
  };

  auto find_min_nonzero = [&](std::size_t k, std::size_t& ri, std::size_t& rj) {
    bool found = false;
    BigInt best;
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < n; ++j) {
        if (d(i, j) == 0) continue;
        BigInt v = abs(d(i, j));
        if (!found || v < best) {
          found = true;
          best = std::move(v);
          ri = i;
          rj = j;
        }
      }
    return found;
  };
  auto is_lone = [&](std::size_t k) {
    for (std::size_t i = k + 1; i < m; ++i)
      if (d(i, k) != 0) return false;
    for (std::size_t j = k + 1; j < n; ++j)
      if (d(k, j) != 0) return false;
    return true;
  };

  std::size_t k = 0;
  const std::size_t nmin = m < n ? m : n;
  while (k < nmin) {
    std::size_t pi = k, pj = k;
    if (!find_min_nonzero(k, pi, pj)) break;  // trailing block zero: rank = k
    swap_rows(k, pi);
    swap_cols(k, pj);
    while (!is_lone(k)) {
      // Euclidean shrink of column and row k; pivot strictly decreases.
      for (std::size_t i = k + 1; i < m; ++i)
        if (d(i, k) != 0) add_row(i, k, -(d(i, k) / d(k, k)));
      for (std::size_t j = k + 1; j < n; ++j)
        if (d(k, j) != 0) add_col(j, k, -(d(k, j) / d(k, k)));
      if (is_lone(k)) break;
      if (!find_min_nonzero(k, pi, pj)) break;
      swap_rows(k, pi);
      swap_cols(k, pj);
    }
    // enforce that the pivot divides every trailing entry
    bool divides_all = true;
    for (std::size_t i = k + 1; i < m && divides_all; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        if (d(i, j) % d(k, k) != 0) {
          add_row(k, i, 1);
          divides_all = false;
          break;
        }
    if (!divides_all) continue;  // re-run elimination at the same pivot index
    if (d(k, k) < 0) negate_row(k);
    ++k;
  }
  out.rank = k;
  return out;
}

}  // namespace grcat
