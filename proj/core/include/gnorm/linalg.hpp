#ifndef GNORM_LINALG_HPP
#define GNORM_LINALG_HPP

#include <cstddef>
#include <vector>

#include "gnorm/errors.hpp"

namespace gnorm {

// Dense matrix over an abstract field, row major.
template <class K>
struct Mat {
  using El = typename K::El;
  size_t rows = 0, cols = 0;
  std::vector<El> a;

  Mat() = default;
  Mat(const K& k, size_t r, size_t c) : rows(r), cols(c), a(r * c, k.zero()) {}
  El& at(size_t i, size_t j) { return a[i * cols + j]; }
  const El& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

// In-place reduced row echelon form; returns pivot column per pivot row.
template <class K>
std::vector<size_t> rref(const K& k, Mat<K>& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t sel = row;
    while (sel < m.rows && k.is_zero(m.at(sel, col))) ++sel;
    if (sel == m.rows) continue;
    for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    auto inv = k.inv(m.at(row, col));
    for (size_t j = 0; j < m.cols; ++j) m.at(row, j) = k.mul(m.at(row, j), inv);
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == row || k.is_zero(m.at(i, col))) continue;
      auto f = m.at(i, col);
      for (size_t j = 0; j < m.cols; ++j)
        m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Kernel basis (as rows), canonical via RREF.
template <class K>
std::vector<std::vector<typename K::El>> kernel_basis(const K& k, Mat<K> m) {
  auto pivots = rref(k, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename K::El>> out;
  for (size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<typename K::El> v(m.cols, k.zero());
    v[free_col] = k.one();
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = k.neg(m.at(r, free_col));
    out.push_back(std::move(v));
  }
  return out;
}

// Solves m * x = b; returns false when inconsistent. When the system is
// underdetermined the free variables are set to zero.
template <class K>
bool solve_linear(const K& k, Mat<K> m, std::vector<typename K::El> b,
                  std::vector<typename K::El>& x) {
  if (b.size() != m.rows) fail(errc::validation_error, "solve: shape mismatch");
  Mat<K> aug(k, m.rows, m.cols + 1);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  auto pivots = rref(k, aug);
  for (size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] == m.cols) return false;  // pivot in the constant column
  x.assign(m.cols, k.zero());
  for (size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug.at(r, m.cols);
  return true;
}

}  // namespace gnorm

#endif
