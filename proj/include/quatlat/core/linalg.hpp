#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quatlat/core/matrix.hpp"

namespace quatlat {

namespace detail {

// Clears denominators row by row; returns the product of the row scales.
inline IntMatrix integerize_rows(const RatMatrix& m, Integer& scale) {
  IntMatrix out(m.rows(), m.cols());
  scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer d = common_denominator(m.row(i));
    scale *= d;
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = Rational(m(i, j) * d).get_num();
  }
  return out;
}

// Fraction-free Gaussian elimination in place. Returns the rank; `det_sign`
// collects row swap parity and `last_pivot` the final Bareiss pivot, which is
// the determinant up to sign when the matrix is square and nonsingular.
inline std::size_t bareiss(IntMatrix& a, int& det_sign, Integer& last_pivot) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  det_sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      a.swap_rows(p, r);
      det_sign = -det_sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  last_pivot = prev;
  return r;
}

}  // namespace detail

/// Exact determinant by Bareiss fraction-free elimination.
inline Rational det_exact(const RatMatrix& m) {
  if (!m.is_square()) throw PreconditionError("det_exact: matrix not square");
  if (m.rows() == 0) return Rational(1);
  Integer scale;
  IntMatrix a = detail::integerize_rows(m, scale);
  int s = 1;
  Integer last;
  if (detail::bareiss(a, s, last) < m.rows()) return Rational(0);
  return make_rational(last * s, scale);
}

inline Integer det_exact(const IntMatrix& m) {
  if (!m.is_square()) throw PreconditionError("det_exact: matrix not square");
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  int s = 1;
  Integer last;
  if (detail::bareiss(a, s, last) < m.rows()) return 0;
  return last * s;
}

/// Rank over Q.
inline std::size_t rank_over_Q(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Integer scale;
  IntMatrix a = detail::integerize_rows(m, scale);
  int s;
  Integer last;
  return detail::bareiss(a, s, last);
}

inline std::size_t rank_over_Q(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntMatrix a = m;
  int s;
  Integer last;
  return detail::bareiss(a, s, last);
}

/// Exact inverse by Gauss-Jordan; nullopt when singular.
inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw PreconditionError("inverse: matrix not square");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      a.sub_row_multiple(i, c, f);
      inv.sub_row_multiple(i, c, f);
    }
  }
  return inv;
}

/// Fincke-Pohst form of a symmetric matrix: q(i,i) are the LDL^T pivots and
/// q(i,j), j > i, the multipliers, so that
///   x G x^T = sum_i q(i,i) * (x_i + sum_{j>i} q(i,j) x_j)^2.
/// Returns nullopt when some pivot is <= 0 (not positive definite).
inline std::optional<RatMatrix> fincke_pohst_form(const RatMatrix& g) {
  const std::size_t n = g.rows();
  RatMatrix q = g;
  for (std::size_t i = 0; i < n; ++i) {
    if (q(i, i) <= 0) return std::nullopt;
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  return q;
}

/// Symmetric and all leading principal minors positive.
inline bool is_positive_definite(const RatMatrix& g) {
  return g.is_symmetric() && fincke_pohst_form(g).has_value();
}

}  // namespace quatlat
