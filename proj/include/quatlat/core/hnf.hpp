#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quatlat/core/matrix.hpp"

namespace quatlat {

struct HnfResult {
  /// Nonzero rows of the row Hermite normal form (rank x cols).
  IntMatrix basis;
  /// Pivot column of each basis row.
  std::vector<std::size_t> pivots;
  /// Unimodular U with U * input = [basis; 0]; empty unless requested.
  IntMatrix transform;
  std::size_t rank() const { return basis.rows(); }
};

/// Row Hermite normal form: upper echelon, positive pivots, entries above a
/// pivot reduced into [0, pivot). The Z-row-span of the input is preserved and
/// the result is unique for that span.
inline HnfResult hnf(const IntMatrix& input, bool with_transform = false) {
  IntMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix u = with_transform ? IntMatrix::identity(rows) : IntMatrix();
  auto swap = [&](std::size_t a, std::size_t b) {
    m.swap_rows(a, b);
    if (with_transform) u.swap_rows(a, b);
  };
  auto sub = [&](std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    m.sub_row_multiple(dst, src, q);
    if (with_transform) u.sub_row_multiple(dst, src, q);
  };
  auto negate = [&](std::size_t i) {
    m.negate_row(i);
    if (with_transform) u.negate_row(i);
  };

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r.. until only row r is nonzero there.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        if (!best || abs(m(i, c)) < abs(m(*best, c))) best = i;
      }
      if (!best) break;
      swap(r, *best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        sub(i, r, q);
        if (m(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) negate(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
      sub(i, r, q);
    }
    pivots.push_back(c);
    ++r;
  }

  HnfResult out;
  out.basis = IntMatrix(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.basis(i, j) = m(i, j);
  out.pivots = std::move(pivots);
  if (with_transform) out.transform = std::move(u);
  return out;
}

/// Solves c * H = v for an integer row vector c, where H is a full-column-rank
/// HNF basis (square, upper triangular). Returns nullopt if c is not integral.
inline std::optional<std::vector<Integer>> solve_in_hnf(
    const IntMatrix& h, std::span<const Rational> v) {
  const std::size_t n = h.rows();
  std::vector<Integer> c(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational acc = v[j];
    for (std::size_t i = 0; i < j; ++i)
      if (c[i] != 0 && h(i, j) != 0) acc -= Rational(c[i] * h(i, j));
    acc /= Rational(h(j, j));
    if (acc.get_den() != 1) return std::nullopt;
    c[j] = acc.get_num();
  }
  return c;
}

}  // namespace quatlat
