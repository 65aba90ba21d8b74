#pragma once

#include <cstddef>
#include <vector>

#include "quatlat/core/linalg.hpp"
#include "quatlat/field/number_field.hpp"
#include "quatlat/field/polynomial.hpp"

namespace quatlat {

/// The N-th cyclotomic polynomial, by dividing X^N - 1 by Phi_d for d | N, d < N.
inline Poly cyclotomic_polynomial(long N) {
  if (N < 1) throw PreconditionError("cyclotomic_polynomial: N must be >= 1");
  Poly p = Poly::monomial(static_cast<std::size_t>(N)) - Poly::constant(1);
  for (long d = 1; d < N; ++d)
    if (N % d == 0) p = p / cyclotomic_polynomial(d);
  return p;
}

/// Resultant of two polynomials over Q via the Sylvester determinant.
inline Rational resultant(const Poly& a, const Poly& b) {
  const int m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) return Rational(0);
  if (m == 0 && n == 0) return Rational(1);
  const std::size_t size = static_cast<std::size_t>(m + n);
  RatMatrix s(size, size);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s(i, i + k) = a.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s(n + i, i + k) = b.coeff(n - k);
  return det_exact(s);
}

/// Minimal polynomial of zeta_N + zeta_N^-1 = 2 cos(2 pi / N), N >= 3.
/// Eliminates Y from Phi_N(Y) = 0 and Y^2 - X Y + 1 = 0: the resultant in X is
/// evaluated at deg+1 integer points, interpolated, and its squarefree part
/// taken (each value of X comes from the pair zeta, zeta^-1).
inline Poly real_cyclotomic_polynomial(long N) {
  if (N < 3) throw PreconditionError("real_cyclotomic_field: 2m must be >= 3");
  const Poly phi = cyclotomic_polynomial(N);
  const std::size_t deg = static_cast<std::size_t>(phi.degree());
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= deg; ++k) {
    Rational x(static_cast<long>(k));
    Poly quad({Rational(1), -x, Rational(1)});
    xs.push_back(x);
    ys.push_back(resultant(phi, quad));
  }
  // Lagrange interpolation.
  Poly r;
  for (std::size_t i = 0; i <= deg; ++i) {
    Poly term = Poly::constant(ys[i]);
    for (std::size_t j = 0; j <= deg; ++j) {
      if (j == i) continue;
      term = term * Poly({-xs[j], Rational(1)});
      term = (1 / (xs[i] - xs[j])) * term;
    }
    r = r + term;
  }
  return squarefree_part(r);
}

/// K = Q(zeta_N + zeta_N^-1), of degree phi(N)/2 (Q itself when phi(N) = 2).
inline NumberField real_cyclotomic_field(long two_m) {
  return NumberField::from_poly(real_cyclotomic_polynomial(two_m).coeffs());
}

}  // namespace quatlat
