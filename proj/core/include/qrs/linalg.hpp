#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qrs {

// Dense exact linear algebra over a field scalar (Rat or SurdSum).
// Sizes here are tiny (dimension of a root system, or its root count).
template <class T>
using Mat = std::vector<std::vector<T>>;

template <class T>
Mat<T> mat_zeros(std::size_t r, std::size_t c) {
  return Mat<T>(r, std::vector<T>(c, T(0)));
}

template <class T>
Mat<T> mat_identity(std::size_t n) {
  auto m = mat_zeros<T>(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
  return m;
}

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  auto out = mat_zeros<T>(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == T(0)) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

template <class T>
Mat<T> mat_transpose(const Mat<T>& a) {
  if (a.empty()) return a;
  auto out = mat_zeros<T>(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

// Gauss-Jordan inverse; throws std::domain_error if singular.
template <class T>
Mat<T> mat_inverse(Mat<T> a) {
  std::size_t n = a.size();
  auto inv = mat_identity<T>(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == T(0)) ++piv;
    if (piv == n) throw std::domain_error("mat_inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    T d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = a[col][j] / d;
      inv[col][j] = inv[col][j] / d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == T(0)) continue;
      T f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Solve A x = b for square invertible A; returns nullopt if singular.
template <class T>
std::optional<std::vector<T>> mat_solve(Mat<T> a, std::vector<T> b) {
  std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == T(0)) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    T d = a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] = a[col][j] / d;
    b[col] = b[col] / d;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == T(0)) continue;
      T f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

template <class T>
std::size_t mat_rank(Mat<T> a) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size(), rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == T(0)) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][col] == T(0)) continue;
      T f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace qrs
