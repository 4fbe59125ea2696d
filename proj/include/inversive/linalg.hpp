#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "inversive/fields.hpp"

namespace inversive {

template <class K>
using Matrix = std::vector<std::vector<K>>;

template <class K>
bool is_zero_elem(const K& k) {
  return k == (k - k);
}

template <FieldType F>
Matrix<typename F::element_type> identity_matrix(const F& f, std::size_t n) {
  Matrix<typename F::element_type> m(n, std::vector<typename F::element_type>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = f.one();
  return m;
}

template <FieldType F>
Matrix<typename F::element_type> mat_mul(const F& f, const Matrix<typename F::element_type>& a,
                                          const Matrix<typename F::element_type>& b) {
  std::size_t n = a.size(), m = b[0].size(), inner = b.size();
  Matrix<typename F::element_type> out(n, std::vector<typename F::element_type>(m, f.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (is_zero_elem(a[i][k])) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  }
  return out;
}

template <FieldType F>
std::vector<typename F::element_type> mat_vec(const F& f, const Matrix<typename F::element_type>& a,
                                              const std::vector<typename F::element_type>& x) {
  std::vector<typename F::element_type> out(a.size(), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) out[i] = out[i] + a[i][j] * x[j];
  }
  return out;
}

/// In-place reduced row echelon form; returns the pivot columns.
template <FieldType F>
std::vector<std::size_t> rref(const F& f, Matrix<typename F::element_type>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t r = row; r < rows; ++r) {
      if (!is_zero_elem(m[r][col])) {
        sel = r;
        break;
      }
    }
    if (sel == rows) continue;
    std::swap(m[row], m[sel]);
    auto inv = f.one() / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || is_zero_elem(m[r][col])) continue;
      auto factor = m[r][col];
      for (std::size_t j = col; j < cols; ++j) m[r][j] = m[r][j] - factor * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of the right null space of m (vectors v with m v = 0).
template <FieldType F>
std::vector<std::vector<typename F::element_type>> kernel_basis(
    const F& f, Matrix<typename F::element_type> m, std::size_t cols) {
  auto pivots = rref(f, m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::element_type>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<typename F::element_type> v(cols, f.zero());
    v[free_col] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -m[r][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves a x = rhs exactly; free variables are set to zero. Returns nullopt
/// for inconsistent systems.
template <FieldType F>
std::optional<std::vector<typename F::element_type>> solve_linear(
    const F& f, Matrix<typename F::element_type> a,
    const std::vector<typename F::element_type>& rhs) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(rhs[i]);
  auto pivots = rref(f, a);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<typename F::element_type> x(cols, f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

template <FieldType F>
typename F::element_type det(const F& f, Matrix<typename F::element_type> m) {
  std::size_t n = m.size();
  auto result = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = n;
    for (std::size_t r = col; r < n; ++r) {
      if (!is_zero_elem(m[r][col])) {
        sel = r;
        break;
      }
    }
    if (sel == n) return f.zero();
    if (sel != col) {
      std::swap(m[col], m[sel]);
      result = -result;
    }
    result = result * m[col][col];
    auto inv = f.one() / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero_elem(m[r][col])) continue;
      auto factor = m[r][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[r][j] = m[r][j] - factor * m[col][j];
    }
  }
  return result;
}

}  // namespace inversive
