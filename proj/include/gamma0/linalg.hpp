#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gamma0/integer.hpp"
#include "gamma0/rational.hpp"

namespace gamma0 {

/// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols) throw DomainError("IntMatrix: ragged initializer");
      for (long long v : row) data.emplace_back(v);
    }
  }

  Integer& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Rank over Q via Bareiss fraction-free elimination.
inline std::size_t integer_rank(IntMatrix m) {
  std::size_t rank = 0;
  Integer prev_pivot = 1;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(pivot, j), m(rank, j));
    }
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      for (std::size_t j = col + 1; j < m.cols; ++j) {
        // Exact by Sylvester's identity.
        m(i, j) = (m(rank, col) * m(i, j) - m(i, col) * m(rank, j)) / prev_pivot;
      }
      m(i, col) = 0;
    }
    prev_pivot = m(rank, col);
    ++rank;
  }
  return rank;
}

/// gcd of absolute values; the empty list and the all-zero list give 0.
inline Integer gcd_all(std::span<const Integer> xs) {
  Integer g = 0;
  for (const auto& x : xs) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

/// One solution x of A x = b over Q, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
inline std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a,
                                                           std::span<const Rational> b) {
  if (b.size() != a.rows) throw DomainError("solve_rational: dimension mismatch");
  const std::size_t n = a.cols;
  std::vector<std::vector<Rational>> aug(a.rows, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(a(i, j));
    aug[i][n] = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < a.rows; ++col) {
    std::size_t p = row;
    while (p < a.rows && aug[p][col].is_zero()) ++p;
    if (p == a.rows) continue;
    std::swap(aug[p], aug[row]);
    const Rational inv = Rational(1) / aug[row][col];
    for (std::size_t j = col; j <= n; ++j) aug[row][j] *= inv;
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == row || aug[i][col].is_zero()) continue;
      const Rational f = aug[i][col];
      for (std::size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < a.rows; ++i) {
    if (!aug[i][n].is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = aug[i][n];
  return x;
}

}  // namespace gamma0
