#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "quatlat/field/polynomial.hpp"

namespace quatlat {

/// Closed rational interval [lo, hi].
struct RatInterval {
  Rational lo, hi;

  static RatInterval point(const Rational& v) { return {v, v}; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return a + (-b);
  }
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
  }
};

/// Horner evaluation of a rational polynomial over an interval.
inline RatInterval eval_interval(const Poly& p, const RatInterval& x) {
  RatInterval acc = RatInterval::point(0);
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + RatInterval::point(c[i]);
  return acc;
}

/// Isolating interval (lo, hi] of a simple real root; `exact` marks a rational
/// root, in which case lo == hi is the root itself.
struct RootInterval {
  Rational lo, hi;
  bool exact = false;
  RatInterval as_interval() const { return {lo, hi}; }
};

class SturmSequence {
 public:
  explicit SturmSequence(const Poly& f) {
    seq_.push_back(f);
    seq_.push_back(f.derivative());
    while (!seq_.back().is_zero()) {
      Poly r = -(seq_[seq_.size() - 2] % seq_.back());
      if (r.is_zero()) break;
      seq_.push_back(std::move(r));
    }
    if (seq_.back().is_zero()) seq_.pop_back();
  }

  int sign_changes(const Rational& x) const {
    int changes = 0, prev = 0;
    for (const auto& p : seq_) {
      int s = sgn(p(x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
    return changes;
  }

  /// Number of distinct real roots in (a, b].
  int count(const Rational& a, const Rational& b) const {
    return sign_changes(a) - sign_changes(b);
  }

 private:
  std::vector<Poly> seq_;
};

/// Cauchy bound: all real roots lie in (-B, B).
inline Rational cauchy_bound(const Poly& f) {
  Rational m(0);
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, Rational(abs(f.coeff(i) / f.lead())));
  return m + 1;
}

/// Splits one isolating interval in half, keeping the half with the root.
inline void bisect_root(const Poly& f, const SturmSequence& sturm, RootInterval& r) {
  if (r.exact) return;
  Rational mid = (r.lo + r.hi) / 2;
  if (f(mid) == 0) {
    r = {mid, mid, true};
    return;
  }
  if (sturm.count(r.lo, mid) == 1)
    r.hi = mid;
  else
    r.lo = mid;
}

/// Isolating intervals for the distinct real roots of squarefree f, ascending.
inline std::vector<RootInterval> isolate_real_roots(const Poly& f) {
  std::vector<RootInterval> out;
  if (f.degree() < 1) return out;
  SturmSequence sturm(f);
  Rational b = cauchy_bound(f);
  std::vector<RootInterval> stack{{-b, b, false}};
  while (!stack.empty()) {
    RootInterval iv = stack.back();
    stack.pop_back();
    int c = sturm.count(iv.lo, iv.hi);
    if (c == 0) continue;
    if (c == 1) {
      if (f(iv.hi) == 0) iv = {iv.hi, iv.hi, true};
      out.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    stack.push_back({iv.lo, mid, false});
    stack.push_back({mid, iv.hi, false});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.hi < b.hi; });
  return out;
}

/// Refines until the width is at most `max_width`.
inline void refine_root(const Poly& f, const SturmSequence& sturm, RootInterval& r,
                        const Rational& max_width) {
  while (!r.exact && r.hi - r.lo > max_width) bisect_root(f, sturm, r);
}

}  // namespace quatlat
