#pragma once

// Test-only oracle: plain dense Gaussian elimination, written independently of
// the library's sparse engine. Used to cross-check rank/kernel results.

#include <vector>

#include "cohomolab/fields.hpp"
#include "cohomolab/matrix.hpp"

namespace oracle {

template <cohomolab::FieldLike F>
using Dense = std::vector<std::vector<typename F::Scalar>>;

template <cohomolab::FieldLike F>
Dense<F> to_dense(const cohomolab::ExactMatrix<F>& m) {
  const F& f = m.field();
  Dense<F> d(m.rows(), std::vector<typename F::Scalar>(m.cols(), f.zero()));
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& [c, v] : m.row(i)) d[i][c] = v;
  return d;
}

// Rank by textbook row reduction with first-nonzero pivoting.
template <cohomolab::FieldLike F>
int dense_rank(const F& f, Dense<F> a) {
  if (a.empty()) return 0;
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!f.is_zero(a[i][c])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    auto ipv = f.inv(a[r][c]);
    for (int j = c; j < cols; ++j) a[r][j] = f.mul(a[r][j], ipv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || f.is_zero(a[i][c])) continue;
      auto m = a[i][c];
      for (int j = c; j < cols; ++j)
        a[i][j] = f.sub(a[i][j], f.mul(m, a[r][j]));
    }
    ++r;
  }
  return r;
}

template <cohomolab::FieldLike F>
int dense_rank(const cohomolab::ExactMatrix<F>& m) {
  return dense_rank(m.field(), to_dense(m));
}

template <cohomolab::FieldLike F>
int dense_kernel_dim(const cohomolab::ExactMatrix<F>& m) {
  return m.cols() - dense_rank(m);
}

}  // namespace oracle
