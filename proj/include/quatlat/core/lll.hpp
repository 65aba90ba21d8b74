#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "quatlat/core/linalg.hpp"
#include "quatlat/core/matrix.hpp"

namespace quatlat {

struct LllResult {
  RatMatrix gram;       ///< U * G * U^T
  IntMatrix transform;  ///< unimodular U
};

/// LLL reduction driven by the Gram matrix alone (integral variant with exact
/// subdeterminants d_k and scaled Gram-Schmidt coefficients lambda_{k,j}).
/// `delta` must lie in (1/4, 1).
inline LllResult lll_reduce(const RatMatrix& gram,
                            const Rational& delta = Rational(99, 100)) {
  if (!(delta > Rational(1, 4) && delta < 1))
    throw PreconditionError("lll_reduce: delta must lie in (1/4, 1)");
  if (!is_positive_definite(gram))
    throw PreconditionError("lll_reduce: Gram matrix is not positive definite");
  const std::size_t n = gram.rows();
  const Integer scale = common_denominator(gram);
  const IntMatrix g = to_integer(gram, scale);
  IntMatrix u = IntMatrix::identity(n);
  if (n <= 1) return {gram, u};

  // Inner product of current basis vectors k and j: u_k * G * u_j^T.
  auto dot = [&](std::size_t k, std::size_t j) {
    return quadratic_form(g, u.row(k), u.row(j));
  };

  // 1-based bookkeeping as in the textbook statement; d[0] = 1.
  std::vector<Integer> d(n + 1);
  IntMatrix lam(n + 1, n + 1);
  d[0] = 1;
  d[1] = dot(0, 0);
  std::size_t k = 2, kmax = 1;
  const Integer dp = delta.get_num(), dq = delta.get_den();

  auto redi = [&](std::size_t kk, std::size_t l) {
    Integer two_lam = 2 * lam(kk, l);
    if (abs(two_lam) <= d[l]) return;
    Integer q = round_of(make_rational(lam(kk, l), d[l]));
    u.sub_row_multiple(kk - 1, l - 1, q);
    lam(kk, l) -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam(kk, i) -= q * lam(l, i);
  };

  auto swapi = [&](std::size_t kk) {
    u.swap_rows(kk - 1, kk - 2);
    for (std::size_t j = 1; j + 1 < kk; ++j) std::swap(lam(kk, j), lam(kk - 1, j));
    Integer l = lam(kk, kk - 1);
    Integer b = (d[kk - 2] * d[kk] + l * l);
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d[kk - 1].get_mpz_t());
    for (std::size_t i = kk + 1; i <= kmax; ++i) {
      Integer t = lam(i, kk);
      Integer a1 = d[kk] * lam(i, kk - 1) - l * t;
      mpz_divexact(a1.get_mpz_t(), a1.get_mpz_t(), d[kk - 1].get_mpz_t());
      lam(i, kk) = a1;
      Integer a2 = b * t + l * lam(i, kk);
      mpz_divexact(a2.get_mpz_t(), a2.get_mpz_t(), d[kk].get_mpz_t());
      lam(i, kk - 1) = a2;
    }
    d[kk - 1] = b;
  };

  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        Integer v = dot(k - 1, j - 1);
        for (std::size_t i = 1; i < j; ++i) {
          v = d[i] * v - lam(k, i) * lam(j, i);
          mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d[i - 1].get_mpz_t());
        }
        if (j < k)
          lam(k, j) = v;
        else
          d[k] = v;
      }
      if (d[k] <= 0)
        throw PreconditionError("lll_reduce: Gram matrix is not positive definite");
    }
    for (;;) {
      redi(k, k - 1);
      // Lovasz: d_k d_{k-2} >= (delta d_{k-1}^2 - lambda^2), scaled by dq.
      const Integer& lk = lam(k, k - 1);
      if (dq * (d[k] * d[k - 2] + lk * lk) < dp * d[k - 1] * d[k - 1]) {
        swapi(k);
        k = std::max<std::size_t>(2, k - 1);
        continue;
      }
      for (std::size_t l = k - 1; l-- > 1;) redi(k, l);
      ++k;
      break;
    }
  }

  RatMatrix reduced = congruence(u, gram);
  return {std::move(reduced), std::move(u)};
}

}  // namespace quatlat
