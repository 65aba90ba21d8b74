#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quatlat/field/polynomial.hpp"
#include "quatlat/field/real_roots.hpp"

namespace quatlat {

namespace detail {

// Dense polynomials over F_p, p < 2^31, constant term first.
using ModPoly = std::vector<std::uint64_t>;

inline void mp_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t mp_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline ModPoly mp_mod(ModPoly a, const ModPoly& m, std::uint64_t p) {
  mp_trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv = mp_pow(m.back(), p - 2, p);
  while (a.size() > dm) {
    std::uint64_t f = a.back() * inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j)
      a[shift + j] = (a[shift + j] + p - f * m[j] % p) % p;
    mp_trim(a);
  }
  return a;
}

inline ModPoly mp_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m,
                         std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return mp_mod(std::move(c), m, p);
}

inline ModPoly mp_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  mp_trim(a);
  mp_trim(b);
  while (!b.empty()) {
    ModPoly r = mp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline ModPoly mp_derivative(const ModPoly& a, std::uint64_t p) {
  ModPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (i % p) % p);
  mp_trim(d);
  return d;
}

// Ben-Or: squarefree f of degree n over F_p is irreducible iff
// gcd(X^{p^i} - X, f) = 1 for i = 1..n/2.
inline bool irreducible_mod_p(const ModPoly& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  ModPoly x = mp_mod({0, 1}, f, p);
  ModPoly xp = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    ModPoly r{1}, base = xp;
    for (std::uint64_t e = p; e; e >>= 1) {
      if (e & 1) r = mp_mulmod(r, base, f, p);
      base = mp_mulmod(base, base, f, p);
    }
    xp = r;
    ModPoly diff = xp;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    mp_trim(diff);
    ModPoly g = mp_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

inline bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Monic integer polynomial F with roots c * (roots of f).
inline std::vector<Integer> integral_model(const Poly& f) {
  const int n = f.degree();
  Integer c = 1;
  for (int i = 0; i < n; ++i) c = lcm(c, f.coeff(i).get_den());
  std::vector<Integer> out(n + 1);
  Integer cp = 1;
  for (int i = n; i >= 0; --i) {
    Rational v = f.coeff(i) * Rational(cp);
    out[i] = v.get_num();  // denominators cleared by construction
    cp *= c;
  }
  return out;
}

// Candidate factors over Z are products of (X - r) over subsets of the real
// roots; with all roots real and isolated, enclosing the elementary symmetric
// functions of every subset decides whether some monic integer factor exists.
inline bool has_factor_from_root_subsets(const std::vector<Integer>& F) {
  const std::size_t n = F.size() - 1;
  std::vector<Rational> fc;
  for (const auto& v : F) fc.emplace_back(v);
  Poly f(fc);
  SturmSequence sturm(f);
  std::vector<RootInterval> roots = isolate_real_roots(f);
  if (roots.size() != n) throw PreconditionError("factor search requires n real roots");

  std::vector<std::size_t> subset;
  auto test_subset = [&](const std::vector<std::size_t>& idx) {
    Rational width(1, 16);
    for (int iter = 0; iter < 4000; ++iter) {
      std::vector<RatInterval> poly{RatInterval::point(1)};
      for (std::size_t k : idx) {
        RatInterval r = roots[k].as_interval();
        std::vector<RatInterval> next(poly.size() + 1, RatInterval::point(0));
        for (std::size_t j = 0; j < poly.size(); ++j) {
          next[j + 1] = next[j + 1] + poly[j];
          next[j] = next[j] - poly[j] * r;
        }
        poly = std::move(next);
      }
      bool need_refine = false;
      std::vector<Rational> g;
      for (const auto& c : poly) {
        Integer lo = ceil_of(c.lo), hi = floor_of(c.hi);
        if (lo > hi) return false;
        if (lo < hi) {
          need_refine = true;
          break;
        }
        g.emplace_back(lo);
      }
      if (!need_refine) {
        Poly gp(g);
        return (f % gp).is_zero();
      }
      width /= 4;
      for (std::size_t k : idx) refine_root(f, sturm, roots[k], width);
    }
    throw ConsistencyError("factor search did not converge");
  };

  // Enumerate subsets of size 1..n/2 in lexicographic order.
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    for (;;) {
      if (test_subset(idx)) return true;
      std::size_t i = d;
      while (i > 0 && idx[i - 1] == n - d + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

}  // namespace detail

struct IrreducibilityReport {
  bool irreducible = false;
  /// Primes at which the modular screen ran (F squarefree mod p).
  std::vector<std::uint64_t> primes_tried;
  /// Set when one prime proved irreducibility.
  std::uint64_t witness_prime = 0;
  bool used_fallback = false;
};

/// Irreducibility over Q of a monic squarefree polynomial whose roots are all
/// real. Screens modulo three primes not dividing the discriminant; if none is
/// conclusive, searches integer factors over subsets of the isolated roots.
inline IrreducibilityReport check_irreducible_totally_real(const Poly& f) {
  IrreducibilityReport rep;
  if (f.degree() <= 1) {
    rep.irreducible = f.degree() == 1;
    return rep;
  }
  const auto F = detail::integral_model(f);
  for (std::uint64_t p = 3; rep.primes_tried.size() < 3 && p < 10000; p += 2) {
    if (!detail::is_prime_u64(p)) continue;
    detail::ModPoly fp;
    for (const auto& c : F) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
      fp.push_back(r.get_ui());
    }
    detail::mp_trim(fp);
    if (fp.size() != F.size()) continue;
    if (detail::mp_gcd(fp, detail::mp_derivative(fp, p), p).size() > 1) continue;
    rep.primes_tried.push_back(p);
    if (detail::irreducible_mod_p(fp, p)) {
      rep.irreducible = true;
      rep.witness_prime = p;
      return rep;
    }
  }
  rep.used_fallback = true;
  rep.irreducible = !detail::has_factor_from_root_subsets(F);
  return rep;
}

}  // namespace quatlat
