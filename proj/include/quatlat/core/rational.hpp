#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quatlat/core/error.hpp"

namespace quatlat {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q". Floats are rejected: exact inputs only.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    auto b = t.find_first_not_of(" \t");
    auto e = t.find_last_not_of(" \t");
    t = (b == std::string::npos) ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw ParseError("empty rational literal");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  trim(num);
  trim(den);
  if (num.empty() || den.empty() || !valid_int(num) || !valid_int(den))
    throw ParseError("invalid rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  return make_rational(n, d);
}

/// Canonical "p/q" form; integers print without a denominator.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

/// Nearest integer, ties rounded up.
inline Integer round_of(const Rational& r) { return floor_of(r + Rational(1, 2)); }

/// floor(sqrt(r)) for r >= 0.
inline Integer isqrt_floor(const Rational& r) {
  Integer f = floor_of(r);
  if (f <= 0) return 0;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), f.get_mpz_t());
  return s;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Rational pow(const Rational& base, unsigned long e) {
  Rational r(1);
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Exact k-th root of a non-negative rational, if it is rational.
inline bool exact_root(const Rational& r, unsigned long k, Rational& out) {
  if (r < 0) return false;
  Integer n, d;
  if (mpz_root(n.get_mpz_t(), r.get_num_mpz_t(), k) == 0) return false;
  if (mpz_root(d.get_mpz_t(), r.get_den_mpz_t(), k) == 0) return false;
  out = make_rational(n, d);
  return true;
}

inline int sign(const Rational& r) { return sgn(r); }

/// Closest double; exact values are never derived from it.
inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace quatlat
