#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "quatlat/core/rational.hpp"

namespace quatlat {

/// Univariate polynomial over Q, coefficients stored constant term first.
/// The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Rational& v) { return Poly({v}); }
  static Poly monomial(std::size_t deg, const Rational& v = 1) {
    std::vector<Rational> c(deg + 1, Rational(0));
    c[deg] = v;
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (is_zero()) return {};
    Poly p = *this;
    Rational l = lead();
    for (auto& v : p.c_) v /= l;
    return p;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    Poly p = a;
    for (auto& v : p.c_) v = -v;
    return p;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const Rational& s, const Poly& a) {
    Poly p = a;
    for (auto& v : p.c_) v *= s;
    p.trim();
    return p;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = q * b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> r = a.c_;
    std::vector<Rational> q(a.c_.size() - b.c_.size() + 1, Rational(0));
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
      Rational f = r[k + db] / b.lead();
      q[k] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) r[k + j] -= f * b.c_[j];
    }
    r.resize(db);
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

  /// Monic gcd (zero if both are zero).
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
  static std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b, s0 = constant(1), s1, t0, t1 = constant(1);
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      Poly s2 = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(s2);
      Poly t2 = t0 - q * t1;
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational l = r0.lead();
    Rational il = 1 / l;
    return {il * r0, il * s0, il * t0};
  }

  std::string to_string(const std::string& var = "X") const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      Rational v = c_[i];
      bool neg = v < 0;
      if (neg) v = -v;
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      bool unit = (v == 1) && i > 0;
      if (!unit) s += quatlat::to_string(v);
      if (i > 0) s += (unit ? "" : "*") + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Squarefree part, monic.
inline Poly squarefree_part(const Poly& p) {
  Poly g = Poly::gcd(p, p.derivative());
  return (p / g).monic();
}

}  // namespace quatlat
