#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quatlat/core/linalg.hpp"
#include "quatlat/core/matrix.hpp"
#include "quatlat/field/irreducibility.hpp"
#include "quatlat/field/polynomial.hpp"
#include "quatlat/field/real_roots.hpp"

namespace quatlat {

class FieldElem;

namespace detail {

struct FieldData {
  Poly min_poly;
  std::size_t degree = 0;
  // Rows: power-basis coefficients of the integral basis elements w_k.
  RatMatrix integral_basis;
  RatMatrix integral_basis_inv;
  bool power_basis = true;
  // Power-basis coefficients of theta^(n+k), k = 0..n-2.
  std::vector<std::vector<Rational>> reduction;
  // Tr(theta^k), k = 0..n-1.
  std::vector<Rational> power_traces;
  SturmSequence sturm{Poly()};
  IrreducibilityReport irreducibility;

  // Isolating intervals, ascending; refinement is single-writer.
  mutable std::mutex roots_mutex;
  mutable std::vector<RootInterval> roots;

  explicit FieldData(Poly f) : min_poly(std::move(f)), sturm(min_poly) {}
};

}  // namespace detail

/// A totally real number field K = Q[X]/(f) with a supplied integral basis.
/// Cheap to copy: copies share the same underlying field.
class NumberField {
 public:
  /// Builds K from the monic polynomial f (coefficients constant term first)
  /// and an optional integral basis given as power-basis coefficient rows.
  static NumberField from_poly(
      const std::vector<Rational>& coeffs,
      const std::optional<std::vector<std::vector<Rational>>>& integral_basis =
          std::nullopt);

  std::size_t degree() const { return d_->degree; }
  const Poly& min_poly() const { return d_->min_poly; }
  bool uses_power_basis() const { return d_->power_basis; }
  const IrreducibilityReport& irreducibility() const { return d_->irreducibility; }

  FieldElem zero() const;
  FieldElem one() const;
  /// The class of X, i.e. the generator theta.
  FieldElem theta() const;
  FieldElem from_rational(const Rational& q) const;
  /// Element from power-basis coefficients (length <= degree; missing = 0).
  FieldElem from_coeffs(std::vector<Rational> coeffs) const;
  /// Element sum_k c_k w_k over the integral basis.
  FieldElem from_integral_coords(std::span<const Rational> c) const;
  std::vector<FieldElem> integral_basis() const;

  /// Coordinates of x over the integral basis.
  std::vector<Rational> integral_coords(const FieldElem& x) const;

  /// Isolating intervals of the real roots, ascending (this fixes the order
  /// of the embeddings), each refined to width <= max_width.
  std::vector<RootInterval> roots(const Rational& max_width) const;

  const detail::FieldData& data() const { return *d_; }
  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.d_ == b.d_ || (a.d_->min_poly == b.d_->min_poly &&
                            a.d_->integral_basis == b.d_->integral_basis);
  }

 private:
  explicit NumberField(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
  friend class FieldElem;
};

/// Element of K in power-basis coordinates.
class FieldElem {
 public:
  FieldElem(NumberField field, std::vector<Rational> coeffs)
      : field_(std::move(field)), c_(std::move(coeffs)) {
    c_.resize(field_.degree(), Rational(0));
  }

  const NumberField& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }
  /// The rational value when x lies in Q.
  std::optional<Rational> as_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return std::nullopt;
    return c_[0];
  }
  Poly as_poly() const { return Poly(c_); }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    a.check_same(b);
    FieldElem r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend FieldElem operator-(const FieldElem& a) {
    FieldElem r = a;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    a.check_same(b);
    FieldElem r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    a.check_same(b);
    const auto& d = a.field_.data();
    const std::size_t n = d.degree;
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + n);
    for (std::size_t k = n; k < 2 * n - 1; ++k) {
      if (prod[k] == 0) continue;
      const auto& red = d.reduction[k - n];
      for (std::size_t j = 0; j < n; ++j) out[j] += prod[k] * red[j];
    }
    return FieldElem(a.field_, std::move(out));
  }
  friend FieldElem operator*(const Rational& s, const FieldElem& a) {
    FieldElem r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  /// Multiplicative inverse via the extended gcd with the minimal polynomial.
  FieldElem inverse() const {
    if (is_zero()) throw PreconditionError("division by zero in number field");
    auto [g, s, t] = Poly::xgcd(as_poly(), field_.min_poly());
    if (g.degree() != 0) throw ConsistencyError("minimal polynomial is not irreducible");
    Poly r = s % field_.min_poly();
    return FieldElem(field_, r.coeffs());
  }

  std::string to_string() const {
    return field_.degree() == 1 ? quatlat::to_string(c_[0]) : as_poly().to_string("t");
  }

 private:
  void check_same(const FieldElem& o) const {
    if (!(field_ == o.field_))
      throw PreconditionError("number field elements from different fields");
  }
  NumberField field_;
  std::vector<Rational> c_;
};

inline FieldElem NumberField::zero() const { return FieldElem(*this, {}); }
inline FieldElem NumberField::one() const { return from_rational(1); }
inline FieldElem NumberField::from_rational(const Rational& q) const {
  return FieldElem(*this, {q});
}
inline FieldElem NumberField::from_coeffs(std::vector<Rational> coeffs) const {
  if (coeffs.size() > degree())
    throw ParseError("field element has " + std::to_string(coeffs.size()) +
                     " coefficients, field degree is " + std::to_string(degree()));
  return FieldElem(*this, std::move(coeffs));
}
inline FieldElem NumberField::theta() const {
  if (degree() == 1) return from_rational(-d_->min_poly.coeff(0));
  return from_coeffs({Rational(0), Rational(1)});
}
inline FieldElem NumberField::from_integral_coords(std::span<const Rational> c) const {
  std::vector<Rational> out(degree(), Rational(0));
  for (std::size_t k = 0; k < degree(); ++k)
    for (std::size_t j = 0; j < degree(); ++j) out[j] += c[k] * d_->integral_basis(k, j);
  return FieldElem(*this, std::move(out));
}
inline std::vector<FieldElem> NumberField::integral_basis() const {
  std::vector<FieldElem> out;
  for (std::size_t k = 0; k < degree(); ++k)
    out.push_back(FieldElem(*this, d_->integral_basis.row_vector(k)));
  return out;
}
inline std::vector<Rational> NumberField::integral_coords(const FieldElem& x) const {
  if (d_->power_basis) return x.coeffs();
  std::vector<Rational> out(degree(), Rational(0));
  for (std::size_t k = 0; k < degree(); ++k)
    for (std::size_t j = 0; j < degree(); ++j)
      out[j] += x.coeffs()[k] * d_->integral_basis_inv(k, j);
  return out;
}

inline std::vector<RootInterval> NumberField::roots(const Rational& max_width) const {
  std::lock_guard<std::mutex> lock(d_->roots_mutex);
  for (auto& r : d_->roots) refine_root(d_->min_poly, d_->sturm, r, max_width);
  return d_->roots;
}

/// Matrix of y -> x*y on the power basis (row k = x * theta^k).
inline RatMatrix multiplication_matrix(const FieldElem& x) {
  const auto& K = x.field();
  const std::size_t n = K.degree();
  RatMatrix m(n, n);
  FieldElem basis = K.one();
  const FieldElem th = K.theta();
  for (std::size_t k = 0; k < n; ++k) {
    FieldElem p = x * basis;
    for (std::size_t j = 0; j < n; ++j) m(k, j) = p.coeffs()[j];
    basis = basis * th;
  }
  return m;
}

/// Tr_{K/Q}(x), from traces of the companion matrix powers.
inline Rational trace_Q(const FieldElem& x) {
  const auto& t = x.field().data().power_traces;
  Rational acc(0);
  for (std::size_t k = 0; k < t.size(); ++k)
    if (x.coeffs()[k] != 0) acc += x.coeffs()[k] * t[k];
  return acc;
}

/// N_{K/Q}(x) = det of the multiplication matrix.
inline Rational norm_Q(const FieldElem& x) { return det_exact(multiplication_matrix(x)); }

inline NumberField NumberField::from_poly(
    const std::vector<Rational>& coeffs,
    const std::optional<std::vector<std::vector<Rational>>>& integral_basis) {
  Poly f(coeffs);
  if (f.degree() < 1) throw PreconditionError("field polynomial must have degree >= 1");
  if (f.lead() != 1) throw PreconditionError("field polynomial must be monic");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (Poly::gcd(f, f.derivative()).degree() > 0)
    throw PreconditionError("field polynomial is not squarefree: " + f.to_string());

  auto d = std::make_shared<detail::FieldData>(f);
  d->degree = n;
  d->roots = isolate_real_roots(f);
  if (d->roots.size() != n)
    throw PreconditionError("field polynomial " + f.to_string() + " has " +
                            std::to_string(n - d->roots.size()) +
                            " non-real roots; the field is not totally real");
  d->irreducibility = check_irreducible_totally_real(f);
  if (!d->irreducibility.irreducible)
    throw PreconditionError("field polynomial " + f.to_string() + " is reducible over Q");

  // theta^(n+k) reduced modulo f.
  std::vector<Rational> cur(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) cur[j] = -f.coeff(j);  // theta^n
  for (std::size_t k = 0; k + 1 < n; ++k) {
    d->reduction.push_back(cur);
    std::vector<Rational> next(n, Rational(0));
    for (std::size_t j = 0; j + 1 < n; ++j) next[j + 1] = cur[j];
    for (std::size_t j = 0; j < n; ++j) next[j] -= cur[n - 1] * f.coeff(j);
    cur = std::move(next);
  }

  if (integral_basis) {
    if (integral_basis->size() != n) throw ParseError("integral basis must have n elements");
    std::vector<std::vector<Rational>> rows = *integral_basis;
    for (auto& r : rows) {
      if (r.size() > n) throw ParseError("integral basis element has too many coefficients");
      r.resize(n, Rational(0));
    }
    d->integral_basis = RatMatrix::from_rows(rows);
    d->power_basis = d->integral_basis == RatMatrix::identity(n);
  } else {
    d->integral_basis = RatMatrix::identity(n);
  }
  auto inv = inverse(d->integral_basis);
  if (!inv) throw PreconditionError("integral basis is not linearly independent");
  d->integral_basis_inv = *inv;

  NumberField K(d);
  // Traces of theta^k via companion-matrix powers.
  FieldElem p = K.one();
  for (std::size_t k = 0; k < n; ++k) {
    RatMatrix m = multiplication_matrix(p);
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
    d->power_traces.push_back(tr);
    p = p * K.theta();
  }

  if (!d->power_basis) {
    // The integral basis must be a ring: products stay in its Z-span.
    auto ib = K.integral_basis();
    auto integral = [&](const FieldElem& x) {
      for (const auto& c : K.integral_coords(x))
        if (c.get_den() != 1) return false;
      return true;
    };
    if (!integral(K.one()))
      throw PreconditionError("integral basis does not contain 1 in its Z-span");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (!integral(ib[i] * ib[j]))
          throw PreconditionError("integral basis is not closed under multiplication");
  }
  return K;
}

/// Exact signs of sigma_1(x), ..., sigma_n(x) in ascending root order.
inline std::vector<int> signs_at_embeddings(const FieldElem& x) {
  if (x.is_zero()) throw PreconditionError("signs_at_embeddings: x = 0");
  const auto& K = x.field();
  const Poly g = x.as_poly();
  std::vector<int> out(K.degree(), 0);
  Rational width(1, 16);
  std::vector<bool> done(K.degree(), false);
  for (;;) {
    auto roots = K.roots(width);
    bool all = true;
    for (std::size_t m = 0; m < roots.size(); ++m) {
      if (done[m]) continue;
      RatInterval v = roots[m].exact ? RatInterval::point(g(roots[m].lo))
                                     : eval_interval(g, roots[m].as_interval());
      if (!v.contains_zero() || (roots[m].exact && v.lo != 0)) {
        out[m] = v.lo > 0 ? 1 : -1;
        done[m] = true;
      } else if (roots[m].exact) {
        throw ConsistencyError("nonzero field element vanishes at a root");
      } else {
        all = false;
      }
    }
    if (all) return out;
    width /= 256;
  }
}

inline bool is_totally_positive(const FieldElem& x) {
  if (x.is_zero()) return false;
  for (int s : signs_at_embeddings(x))
    if (s <= 0) return false;
  return true;
}

/// Interval enclosures of sigma_1(x), ..., sigma_n(x), each narrower than
/// 2^-precision_bits.
inline std::vector<RatInterval> embed_real(const FieldElem& x, unsigned precision_bits) {
  const auto& K = x.field();
  const Poly g = x.as_poly();
  Rational target(1);
  mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), precision_bits);
  std::vector<RatInterval> out(K.degree());
  std::vector<bool> done(K.degree(), false);
  Rational width = target;
  for (;;) {
    auto roots = K.roots(width);
    bool all = true;
    for (std::size_t m = 0; m < roots.size(); ++m) {
      if (done[m]) continue;
      RatInterval v = roots[m].exact ? RatInterval::point(g(roots[m].lo))
                                     : eval_interval(g, roots[m].as_interval());
      if (v.width() < target) {
        out[m] = v;
        done[m] = true;
      } else {
        all = false;
      }
    }
    if (all) return out;
    width /= 16;
  }
}

/// Euler's totient.
inline long euler_phi(long m) {
  if (m < 1) throw PreconditionError("euler_phi: m must be >= 1");
  long result = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace quatlat
