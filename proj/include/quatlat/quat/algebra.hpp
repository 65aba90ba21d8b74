#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "quatlat/field/number_field.hpp"

namespace quatlat {

class QuatElem;

namespace detail {
struct AlgebraData {
  NumberField field;
  FieldElem a, b, ab;
  bool totally_definite = false;
};
}  // namespace detail

/// The quaternion algebra (a, b / K) with K-basis {1, i, j, ij},
/// i^2 = a, j^2 = b, ij = -ji.
class QuatAlgebra {
 public:
  /// With `require_totally_definite`, throws unless a and b are negative at
  /// every real embedding.
  QuatAlgebra(const FieldElem& a, const FieldElem& b, bool require_totally_definite = false);

  const NumberField& field() const { return d_->field; }
  const FieldElem& a() const { return d_->a; }
  const FieldElem& b() const { return d_->b; }
  const FieldElem& ab() const { return d_->ab; }
  /// Dimension over Q, 4n.
  std::size_t rational_dimension() const { return 4 * field().degree(); }
  bool is_totally_definite() const { return d_->totally_definite; }

  QuatElem zero() const;
  QuatElem one() const;
  QuatElem scalar(const FieldElem& x) const;
  QuatElem element(FieldElem x0, FieldElem x1, FieldElem x2, FieldElem x3) const;
  QuatElem i() const;
  QuatElem j() const;
  QuatElem ij() const;
  /// Element from global Q-coordinates (index l*n + k <-> w_k e_l).
  QuatElem from_coords(std::span<const Rational> c) const;

  friend bool operator==(const QuatAlgebra& x, const QuatAlgebra& y) {
    return x.d_ == y.d_ || (x.d_->field == y.d_->field && x.d_->a == y.d_->a &&
                            x.d_->b == y.d_->b);
  }

  std::string to_string() const {
    return "(" + a().to_string() + ", " + b().to_string() + ")";
  }

 private:
  std::shared_ptr<const detail::AlgebraData> d_;
  friend class QuatElem;
};

/// x0 + x1 i + x2 j + x3 ij.
class QuatElem {
 public:
  QuatElem(QuatAlgebra alg, std::array<FieldElem, 4> x) : alg_(std::move(alg)), x_(std::move(x)) {}

  const QuatAlgebra& algebra() const { return alg_; }
  const FieldElem& operator[](std::size_t k) const { return x_[k]; }
  const std::array<FieldElem, 4>& components() const { return x_; }
  bool is_zero() const {
    for (const auto& c : x_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend QuatElem operator+(const QuatElem& x, const QuatElem& y) {
    x.check_same(y);
    return {x.alg_, {x.x_[0] + y.x_[0], x.x_[1] + y.x_[1], x.x_[2] + y.x_[2], x.x_[3] + y.x_[3]}};
  }
  friend QuatElem operator-(const QuatElem& x, const QuatElem& y) {
    x.check_same(y);
    return {x.alg_, {x.x_[0] - y.x_[0], x.x_[1] - y.x_[1], x.x_[2] - y.x_[2], x.x_[3] - y.x_[3]}};
  }
  friend QuatElem operator-(const QuatElem& x) { return {x.alg_, {-x.x_[0], -x.x_[1], -x.x_[2], -x.x_[3]}}; }

  /// Product expanded from i^2 = a, j^2 = b, ji = -ij, (ij)^2 = -ab.
  friend QuatElem operator*(const QuatElem& x, const QuatElem& y) {
    x.check_same(y);
    const auto& a = x.alg_.a();
    const auto& b = x.alg_.b();
    const auto& ab = x.alg_.ab();
    const auto& p = x.x_;
    const auto& q = y.x_;
    FieldElem z0 = p[0] * q[0] + a * (p[1] * q[1]) + b * (p[2] * q[2]) - ab * (p[3] * q[3]);
    FieldElem z1 = p[0] * q[1] + p[1] * q[0] + b * (p[3] * q[2] - p[2] * q[3]);
    FieldElem z2 = p[0] * q[2] + p[2] * q[0] + a * (p[1] * q[3] - p[3] * q[1]);
    FieldElem z3 = p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1];
    return {x.alg_, {std::move(z0), std::move(z1), std::move(z2), std::move(z3)}};
  }
  friend QuatElem operator*(const FieldElem& s, const QuatElem& x) {
    return {x.alg_, {s * x.x_[0], s * x.x_[1], s * x.x_[2], s * x.x_[3]}};
  }
  friend QuatElem operator*(const Rational& s, const QuatElem& x) {
    return {x.alg_, {s * x.x_[0], s * x.x_[1], s * x.x_[2], s * x.x_[3]}};
  }
  QuatElem& operator*=(const QuatElem& o) { return *this = *this * o; }

  friend bool operator==(const QuatElem& x, const QuatElem& y) {
    return x.alg_ == y.alg_ && x.x_ == y.x_;
  }

  /// Global Q-coordinates over {w_k, w_k i, w_k j, w_k ij}: index l*n + k.
  std::vector<Rational> coords() const {
    const auto& K = alg_.field();
    std::vector<Rational> out;
    out.reserve(4 * K.degree());
    for (const auto& c : x_) {
      auto v = K.integral_coords(c);
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  }

  std::string to_string() const;

 private:
  void check_same(const QuatElem& o) const {
    if (!(alg_ == o.alg_)) throw PreconditionError("quaternions from different algebras");
  }
  QuatAlgebra alg_;
  std::array<FieldElem, 4> x_;
};

inline QuatAlgebra::QuatAlgebra(const FieldElem& a, const FieldElem& b,
                                bool require_totally_definite) {
  if (!(a.field() == b.field())) throw PreconditionError("a and b lie in different fields");
  if (a.is_zero() || b.is_zero()) throw PreconditionError("quaternion algebra needs a, b != 0");
  auto d = std::make_shared<detail::AlgebraData>(detail::AlgebraData{a.field(), a, b, a * b, false});
  bool definite = true;
  for (int s : signs_at_embeddings(a)) definite = definite && s < 0;
  for (int s : signs_at_embeddings(b)) definite = definite && s < 0;
  d->totally_definite = definite;
  if (require_totally_definite && !definite)
    throw PreconditionError("quaternion algebra " + ("(" + a.to_string() + ", " + b.to_string() + ")") +
                            " is not totally definite");
  d_ = std::move(d);
}

inline QuatElem QuatAlgebra::element(FieldElem x0, FieldElem x1, FieldElem x2, FieldElem x3) const {
  return QuatElem(*this, {std::move(x0), std::move(x1), std::move(x2), std::move(x3)});
}
inline QuatElem QuatAlgebra::zero() const {
  auto z = field().zero();
  return element(z, z, z, z);
}
inline QuatElem QuatAlgebra::scalar(const FieldElem& x) const {
  auto z = field().zero();
  return element(x, z, z, z);
}
inline QuatElem QuatAlgebra::one() const { return scalar(field().one()); }
inline QuatElem QuatAlgebra::i() const {
  auto z = field().zero();
  return element(z, field().one(), z, z);
}
inline QuatElem QuatAlgebra::j() const {
  auto z = field().zero();
  return element(z, z, field().one(), z);
}
inline QuatElem QuatAlgebra::ij() const {
  auto z = field().zero();
  return element(z, z, z, field().one());
}
inline QuatElem QuatAlgebra::from_coords(std::span<const Rational> c) const {
  const std::size_t n = field().degree();
  if (c.size() != 4 * n) throw PreconditionError("coordinate vector has wrong length");
  std::array<FieldElem, 4> x{field().zero(), field().zero(), field().zero(), field().zero()};
  for (std::size_t l = 0; l < 4; ++l) x[l] = field().from_integral_coords(c.subspan(l * n, n));
  return QuatElem(*this, std::move(x));
}

inline std::string QuatElem::to_string() const {
  static const char* names[4] = {"", "i", "j", "ij"};
  std::string s;
  for (std::size_t l = 0; l < 4; ++l) {
    if (x_[l].is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string c = x_[l].to_string();
    if (l == 0)
      s += c;
    else if (c == "1")
      s += names[l];
    else
      s += "(" + c + ")" + names[l];
  }
  return s.empty() ? "0" : s;
}

inline bool is_totally_definite(const QuatAlgebra& alg) { return alg.is_totally_definite(); }

/// Canonical involution x0 - x1 i - x2 j - x3 ij.
inline QuatElem conj(const QuatElem& x) {
  return x.algebra().element(x[0], -x[1], -x[2], -x[3]);
}

/// tr(x) = x + conj(x) = 2 x0.
inline FieldElem reduced_trace(const QuatElem& x) { return Rational(2) * x[0]; }

/// nrd(x) = x conj(x) = x0^2 - a x1^2 - b x2^2 + ab x3^2.
inline FieldElem reduced_norm(const QuatElem& x) {
  const auto& alg = x.algebra();
  return x[0] * x[0] - alg.a() * (x[1] * x[1]) - alg.b() * (x[2] * x[2]) +
         (alg.a() * alg.b()) * (x[3] * x[3]);
}

/// x^-1 = conj(x) / nrd(x).
inline QuatElem inverse(const QuatElem& x) {
  FieldElem n = reduced_norm(x);
  if (n.is_zero()) throw PreconditionError("quaternion is not invertible (nrd = 0)");
  return n.inverse() * conj(x);
}

/// Scalar part of x * conj(y): x0 y0 - a x1 y1 - b x2 y2 + ab x3 y3.
inline FieldElem scalar_part_x_conj_y(const QuatElem& x, const QuatElem& y) {
  const auto& alg = x.algebra();
  return x[0] * y[0] - alg.a() * (x[1] * y[1]) - alg.b() * (x[2] * y[2]) +
         (alg.a() * alg.b()) * (x[3] * y[3]);
}

/// b_alpha(x, y) = Tr_{K/Q}(tr(alpha x conj(y))), assuming alpha was checked.
inline Rational trace_form_unchecked(const FieldElem& alpha, const QuatElem& x, const QuatElem& y) {
  return 2 * trace_Q(alpha * scalar_part_x_conj_y(x, y));
}

/// The trace form b_alpha(x, y) = Tr_{K/Q}(tr_{A/K}(alpha x conj(y))).
/// Requires a totally definite algebra and totally positive alpha, the
/// hypotheses under which b_alpha is positive definite.
inline Rational trace_form(const FieldElem& alpha, const QuatElem& x, const QuatElem& y) {
  if (!x.algebra().is_totally_definite())
    throw PreconditionError("trace form needs a totally definite algebra");
  if (!is_totally_positive(alpha))
    throw PreconditionError("alpha is not totally positive; b_alpha is not positive definite");
  return trace_form_unchecked(alpha, x, y);
}

}  // namespace quatlat
