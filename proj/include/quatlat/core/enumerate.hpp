#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#include "quatlat/core/linalg.hpp"
#include "quatlat/core/lll.hpp"
#include "quatlat/core/matrix.hpp"

namespace quatlat {

inline constexpr unsigned long long kDefaultNodeBudget = 100'000'000ULL;

/// Default budget, overridable through the QUATLAT_BUDGET environment variable.
inline unsigned long long default_node_budget() {
  if (const char* env = std::getenv("QUATLAT_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw ParseError(std::string("QUATLAT_BUDGET is not an integer: ") + env);
    }
  }
  return kDefaultNodeBudget;
}

struct EnumerationOptions {
  unsigned long long node_budget = default_node_budget();
  /// LLL-reduce first and map the vectors back; the returned set is unchanged.
  bool precondition = true;
};

using IntVector = std::vector<Integer>;

namespace detail {

// Every x != 0 with x G x^T <= bound, Fincke-Pohst recursion in exact
// arithmetic. Integer ranges come from floor(sqrt(.)) and are then tightened
// with an exact test, so no square root is ever approximated.
inline std::vector<IntVector> fincke_pohst(const RatMatrix& gram,
                                           const Rational& bound,
                                           unsigned long long budget) {
  const std::size_t n = gram.rows();
  auto form = fincke_pohst_form(gram);
  if (!form) throw PreconditionError("enumerate: Gram matrix is not positive definite");
  const RatMatrix& q = *form;

  std::vector<IntVector> out;
  IntVector x(n, Integer(0));
  std::vector<Rational> remaining(n + 1);
  unsigned long long nodes = 0;

  struct Level {
    Integer value, hi;
  };
  std::vector<Level> level(n);

  // Sets the candidate range at index i; returns false if empty.
  auto open = [&](std::size_t i) {
    Rational center(0);
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[j] != 0) center -= q(i, j) * Rational(x[j]);
    const Rational radius2 = remaining[i + 1] / q(i, i);
    if (radius2 < 0) return false;
    const Integer s = isqrt_floor(radius2);
    Integer lo = floor_of(center) - s - 1;
    Integer hi = ceil_of(center) + s + 1;
    auto fits = [&](const Integer& v) {
      Rational t = Rational(v) - center;
      return t * t <= radius2;
    };
    while (lo <= hi && !fits(lo)) ++lo;
    while (hi >= lo && !fits(hi)) --hi;
    if (lo > hi) return false;
    level[i] = {lo, hi};
    return true;
  };
  auto term = [&](std::size_t i) -> Rational {
    Rational t = Rational(x[i]);
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[j] != 0) t += q(i, j) * Rational(x[j]);
    return q(i, i) * t * t;
  };

  remaining[n] = bound;
  std::size_t i = n - 1;
  if (!open(i)) return out;
  x[i] = level[i].value;
  for (;;) {
    if (++nodes > budget) throw BudgetExceeded(budget);
    if (x[i] > level[i].hi) {
      // Exhausted this level: climb.
      x[i] = 0;
      if (++i == n) break;
      ++x[i];
      continue;
    }
    remaining[i] = remaining[i + 1] - term(i);
    if (i == 0) {
      if (std::any_of(x.begin(), x.end(), [](const Integer& v) { return v != 0; }))
        out.push_back(x);
      ++x[0];
      continue;
    }
    --i;
    if (open(i)) {
      x[i] = level[i].value;
    } else {
      x[i] = 0;
      ++i;
      ++x[i];
    }
  }
  return out;
}

}  // namespace detail

/// All nonzero integer vectors v with v * gram * v^T <= bound; v and -v both
/// appear, each exactly once, sorted lexicographically.
inline std::vector<IntVector> enumerate_up_to(const RatMatrix& gram,
                                              const Rational& bound,
                                              const EnumerationOptions& opts = {}) {
  if (!gram.is_square() || !gram.is_symmetric())
    throw PreconditionError("enumerate: Gram matrix must be square and symmetric");
  if (bound <= 0) throw PreconditionError("enumerate: bound must be positive");
  std::vector<IntVector> vecs;
  if (opts.precondition && gram.rows() > 1) {
    LllResult red = lll_reduce(gram);
    auto raw = detail::fincke_pohst(red.gram, bound, opts.node_budget);
    const std::size_t n = gram.rows();
    vecs.reserve(raw.size());
    for (const auto& v : raw) {
      IntVector w(n, Integer(0));
      for (std::size_t i = 0; i < n; ++i)
        if (v[i] != 0)
          for (std::size_t j = 0; j < n; ++j) w[j] += v[i] * red.transform(i, j);
      vecs.push_back(std::move(w));
    }
  } else {
    vecs = detail::fincke_pohst(gram, bound, opts.node_budget);
  }
  std::sort(vecs.begin(), vecs.end());
  return vecs;
}

}  // namespace quatlat
