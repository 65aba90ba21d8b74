#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quatlat/field/cyclotomic.hpp"
#include "quatlat/group/norm_one.hpp"

namespace quatlat {

/// One row of the table of well-rounded cases for a given [K:Q] = n.
struct Table1Row {
  std::size_t n = 0;
  GroupClass cls;
  /// Minimal polynomial of t generating K, and the algebra (a, b / K) in t.
  std::string field;
  std::string algebra;
  /// For dihedral rows, 2m.
  long two_m = 0;
  bool predicted = false;
  /// Filled in by build_table1_order.
  std::optional<std::size_t> measured_order;
  std::optional<GroupClass> measured_class;
};

namespace detail {

// Integer with its square factors removed, sign kept.
inline Integer squarefree_kernel(const Integer& v) {
  Integer s = abs(v), out = 1;
  for (Integer p = 2; p * p <= s; ++p) {
    int e = 0;
    while (s % p == 0) {
      s /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  out *= s;
  return v < 0 ? Integer(-out) : out;
}

inline std::string field_string(const NumberField& K) { return K.min_poly().to_string("t"); }

// Rational b up to squares, so that (-1, -4 / Q) prints as (-1, -1 / Q).
inline std::string algebra_string(const NumberField& K, const FieldElem& a, const FieldElem& b) {
  auto fmt = [&](const FieldElem& x) {
    if (auto q = x.as_rational(); q && K.degree() == 1) {
      Integer v = q->get_num() * q->get_den();
      return squarefree_kernel(v).get_str();
    }
    return x.to_string();
  };
  return "(" + fmt(a) + ", " + fmt(b) + " / K)";
}

inline NumberField rational_field() { return NumberField::from_poly({Rational(0), Rational(1)}); }

}  // namespace detail

/// Dihedral orders 4m with phi(2m) = 2n and m > 1, ascending.
inline std::vector<long> dihedral_two_m_values(std::size_t n) {
  std::vector<long> out;
  const long limit = 8 * static_cast<long>(n * n) + 2;  // phi(N) >= sqrt(N / 2)
  for (long N = 4; N <= limit; N += 2)
    if (euler_phi(N) == static_cast<long>(2 * n)) out.push_back(N);
  return out;
}

/// The exceptional orders: Hurwitz over Q, the octahedral order over Q(sqrt 2),
/// the icosians over Q(sqrt 5), all in (-1, -1 / K).
inline QuatModule exceptional_order(GroupClass::Kind kind) {
  using K = GroupClass::Kind;
  Rational h(1, 2);
  if (kind == K::BinaryTetrahedral) {
    NumberField Q = detail::rational_field();
    QuatAlgebra A(Q.from_rational(-1), Q.from_rational(-1), true);
    return module_from_zbasis(A, {A.one(), A.i(), A.j(), h * (A.one() + A.i() + A.j() + A.ij())});
  }
  if (kind == K::BinaryOctahedral) {
    NumberField F = NumberField::from_poly({Rational(-2), Rational(0), Rational(1)});
    QuatAlgebra A(F.from_rational(-1), F.from_rational(-1), true);
    const FieldElem r = h * F.theta();  // sqrt(2)/2
    return module_from_ok_generators(
        A, {A.one(), A.i(), A.j(), A.ij(), h * (A.one() + A.i() + A.j() + A.ij()),
            r * (A.one() + A.i()), r * (A.one() + A.j())});
  }
  if (kind == K::BinaryIcosahedral) {
    NumberField F = NumberField::from_poly({Rational(-1), Rational(-1), Rational(1)});
    QuatAlgebra A(F.from_rational(-1), F.from_rational(-1), true);
    const FieldElem phi = F.theta(), phi_inv = F.theta() - F.one();
    return module_from_ok_generators(
        A, {A.one(), A.i(), A.j(), A.ij(), h * (A.one() + A.i() + A.j() + A.ij()),
            A.element(F.zero(), F.from_rational(h), h * phi_inv, h * phi)});
  }
  throw PreconditionError("exceptional_order: not an exceptional class");
}

/// O_K-span of {1, y, x, xy} in (-1, t^2 - 4 / K), K = Q(zeta_2m + zeta_2m^-1),
/// t = zeta_2m + zeta_2m^-1, y = (t + j)/2 of order 2m and x = i.
inline QuatModule dihedral_order(long two_m) {
  NumberField K = real_cyclotomic_field(two_m);
  const FieldElem t = K.theta();
  QuatAlgebra A(K.from_rational(-1), t * t - K.from_rational(4), true);
  const Rational h(1, 2);
  const QuatElem y = A.element(h * t, K.zero(), K.from_rational(h), K.zero());
  const QuatElem x = A.i();
  return module_from_ok_generators(A, {A.one(), y, x, x * y});
}

/// Rows for [K:Q] = n: the exceptional groups that occur for n and the
/// dihedral groups with phi(2m) = 2n.
inline std::vector<Table1Row> table1_rows(std::size_t n) {
  using K = GroupClass::Kind;
  std::vector<Table1Row> rows;
  auto exceptional = [&](K kind) {
    QuatModule o = exceptional_order(kind);
    const auto& alg = o.algebra();
    Table1Row r;
    r.n = n;
    r.cls = {kind, 0};
    r.field = detail::field_string(alg.field());
    r.algebra = detail::algebra_string(alg.field(), alg.a(), alg.b());
    r.predicted = predict_well_rounded(n, r.cls);
    rows.push_back(r);
  };
  if (n == 1) exceptional(K::BinaryTetrahedral);
  if (n == 2) {
    exceptional(K::BinaryOctahedral);
    exceptional(K::BinaryIcosahedral);
  }
  for (long two_m : dihedral_two_m_values(n)) {
    NumberField F = real_cyclotomic_field(two_m);
    const FieldElem t = F.theta();
    Table1Row r;
    r.n = n;
    r.cls = {K::BinaryDihedral, two_m / 2};
    r.two_m = two_m;
    r.field = detail::field_string(F);
    r.algebra = detail::algebra_string(F, F.from_rational(-1), t * t - F.from_rational(4));
    r.predicted = predict_well_rounded(n, r.cls);
    rows.push_back(r);
  }
  return rows;
}

/// Builds the order behind a row and measures its Lambda^1.
inline void build_table1_order(Table1Row& row, const EnumerationOptions& opts = {}) {
  QuatModule o = row.cls.is_exceptional() ? exceptional_order(row.cls.kind) : dihedral_order(row.two_m);
  FiniteUnitGroup G = enumerate_norm_one(o, opts);
  row.measured_order = G.order();
  row.measured_class = classify(G);
}

/// Known group orders of the rows for n = 1, 2, 3, in row order.
inline std::vector<long> table1_expected_orders(std::size_t n) {
  if (n == 1) return {24, 8, 12};
  if (n == 2) return {48, 120, 16, 20, 24};
  if (n == 3) return {28, 36};
  return {};
}

}  // namespace quatlat
