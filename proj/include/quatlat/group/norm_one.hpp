#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quatlat/lattice/ideal_lattice.hpp"

namespace quatlat {

/// A finite subgroup of A^x of reduced norm one elements, with its
/// multiplication table.
class FiniteUnitGroup {
 public:
  /// Closes nothing: `elems` must already be a group. Throws on closure or
  /// inverse failure.
  explicit FiniteUnitGroup(std::vector<QuatElem> elems) : elems_(std::move(elems)) {
    if (elems_.empty()) throw PreconditionError("empty group");
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (!index_.emplace(elems_[i].coords(), i).second)
        throw PreconditionError("duplicate group element");
    }
    const auto& alg = elems_.front().algebra();
    auto one = find(alg.one());
    if (!one) throw ConsistencyError("norm-one set does not contain 1");
    identity_ = *one;
    const std::size_t N = elems_.size();
    table_.assign(N * N, 0);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        auto k = find(elems_[i] * elems_[j]);
        if (!k) throw ConsistencyError("norm-one set is not closed under multiplication");
        table_[i * N + j] = *k;
      }
    orders_.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
      std::size_t p = i, k = 1;
      while (p != identity_) {
        p = mul(p, i);
        if (++k > N) throw ConsistencyError("group element of infinite order");
      }
      orders_[i] = k;
    }
  }

  std::size_t order() const { return elems_.size(); }
  const std::vector<QuatElem>& elements() const { return elems_; }
  const QuatElem& operator[](std::size_t i) const { return elems_[i]; }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t i, std::size_t j) const { return table_[i * elems_.size() + j]; }
  std::size_t element_order(std::size_t i) const { return orders_[i]; }
  std::size_t max_element_order() const { return *std::max_element(orders_.begin(), orders_.end()); }
  std::size_t power(std::size_t i, std::size_t e) const {
    std::size_t r = identity_;
    for (std::size_t k = 0; k < e; ++k) r = mul(r, i);
    return r;
  }
  std::size_t inverse_of(std::size_t i) const { return power(i, orders_[i] - 1); }
  bool is_abelian() const {
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j = i + 1; j < order(); ++j)
        if (mul(i, j) != mul(j, i)) return false;
    return true;
  }
  std::optional<std::size_t> find(const QuatElem& x) const {
    auto it = index_.find(x.coords());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  /// Size of the subgroup generated by the given elements.
  std::size_t generated_order(const std::vector<std::size_t>& gens) const {
    std::vector<bool> seen(order(), false);
    std::vector<std::size_t> stack{identity_};
    seen[identity_] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t g : gens) {
        std::size_t b = mul(a, g);
        if (!seen[b]) {
          seen[b] = true;
          ++count;
          stack.push_back(b);
        }
      }
    }
    return count;
  }

 private:
  std::vector<QuatElem> elems_;
  std::map<std::vector<Rational>, std::size_t> index_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> orders_;
  std::size_t identity_ = 0;
};

/// Lambda^1 from the minimal vectors of (Lambda, b_1), which are exactly the
/// elements of reduced norm one.
inline FiniteUnitGroup enumerate_norm_one(const QuatModule& order,
                                          const EnumerationOptions& opts = {}) {
  if (!is_order(order)) throw PreconditionError("enumerate_norm_one: module is not an order");
  const auto& K = order.algebra().field();
  IdealLattice L = build_lattice(order, Rational(1));
  const auto S = minimal_vectors(L, opts);
  const Rational expected(static_cast<long>(2 * K.degree()));
  if (S.min_norm != expected)
    throw ConsistencyError("order lattice at alpha = 1 has minimum " + to_string(S.min_norm) +
                           ", expected " + to_string(expected));
  std::vector<QuatElem> elems;
  for (const auto& v : S.vectors) {
    QuatElem x = L.element(v);
    if (!(reduced_norm(x) == K.one()))
      throw ConsistencyError("minimal vector " + x.to_string() + " has reduced norm " +
                             reduced_norm(x).to_string());
    elems.push_back(std::move(x));
  }
  return FiniteUnitGroup(std::move(elems));
}

/// Isomorphism class of a finite subgroup of a totally definite algebra.
struct GroupClass {
  enum class Kind { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };
  Kind kind = Kind::Cyclic;
  /// Cyclic(2m) or BinaryDihedral(4m); 0 for the exceptional groups.
  long m = 0;

  long order() const {
    switch (kind) {
      case Kind::Cyclic: return 2 * m;
      case Kind::BinaryDihedral: return 4 * m;
      case Kind::BinaryTetrahedral: return 24;
      case Kind::BinaryOctahedral: return 48;
      case Kind::BinaryIcosahedral: return 120;
    }
    return 0;
  }
  bool is_exceptional() const {
    return kind != Kind::Cyclic && kind != Kind::BinaryDihedral;
  }
  /// The exponent c in x^2 = y^3 = z^c = xyz.
  long exceptional_c() const {
    switch (kind) {
      case Kind::BinaryTetrahedral: return 3;
      case Kind::BinaryOctahedral: return 4;
      case Kind::BinaryIcosahedral: return 5;
      default: return 0;
    }
  }
  std::string name() const {
    switch (kind) {
      case Kind::Cyclic: return "cyclic";
      case Kind::BinaryDihedral: return "binary_dihedral";
      case Kind::BinaryTetrahedral: return "binary_tetrahedral";
      case Kind::BinaryOctahedral: return "binary_octahedral";
      case Kind::BinaryIcosahedral: return "binary_icosahedral";
    }
    return "";
  }
  std::string to_string() const {
    switch (kind) {
      case Kind::Cyclic: return "Cyclic(" + std::to_string(order()) + ")";
      case Kind::BinaryDihedral: return "BinaryDihedral(" + std::to_string(order()) + ")";
      default: return name();
    }
  }
  friend bool operator==(const GroupClass&, const GroupClass&) = default;
};

namespace detail {
// An x with x^2 = y^m and x y x^-1 = y^-1, if any.
inline std::optional<std::size_t> find_dihedral_x(const FiniteUnitGroup& G, std::size_t y, long m) {
  const std::size_t ym = G.power(y, static_cast<std::size_t>(m));
  const std::size_t yinv = G.inverse_of(y);
  for (std::size_t x = 0; x < G.order(); ++x) {
    if (G.mul(x, x) != ym) continue;
    if (G.mul(G.mul(x, y), G.inverse_of(x)) == yinv) return x;
  }
  return std::nullopt;
}
}  // namespace detail

/// Decides the class from the order, commutativity and the largest element
/// order. Order-4 groups are reported as Cyclic(4).
inline GroupClass classify(const FiniteUnitGroup& G) {
  using K = GroupClass::Kind;
  const std::size_t N = G.order();
  const std::size_t maxo = G.max_element_order();
  if (N % 2 != 0) throw ConsistencyError("unclassifiable: odd group order " + std::to_string(N));
  if (G.is_abelian() && maxo == N) return {K::Cyclic, static_cast<long>(N / 2)};
  if (N == 24 && maxo == 6) return {K::BinaryTetrahedral, 0};
  if (N == 48 && maxo == 8) return {K::BinaryOctahedral, 0};
  if (N == 120 && maxo == 10) return {K::BinaryIcosahedral, 0};
  if (N % 4 == 0) {
    const long m = static_cast<long>(N / 4);
    for (std::size_t y = 0; y < N; ++y) {
      if (G.element_order(y) != static_cast<std::size_t>(2 * m)) continue;
      if (detail::find_dihedral_x(G, y, m)) return {K::BinaryDihedral, m};
    }
  }
  throw ConsistencyError("unclassifiable group of order " + std::to_string(N) +
                         " with largest element order " + std::to_string(maxo));
}

/// Dihedral: x, y with y^(2m) = 1, x^2 = y^m, x y x^-1 = y^-1.
/// Exceptional: x = y z, y of order 6, z of order 2c, x^2 = y^3 = z^c = xyz.
/// Cyclic: y a generator. Indices refer to the group.
struct PresentationGenerators {
  GroupClass cls;
  std::optional<std::size_t> x, y, z;
};

inline bool verify_presentation(const FiniteUnitGroup& G, const PresentationGenerators& p) {
  using K = GroupClass::Kind;
  const std::size_t one = G.identity();
  if (p.cls.kind == K::Cyclic) {
    return p.y && G.element_order(*p.y) == G.order();
  }
  if (p.cls.kind == K::BinaryDihedral) {
    if (!p.x || !p.y) return false;
    const std::size_t x = *p.x, y = *p.y;
    const auto m = static_cast<std::size_t>(p.cls.m);
    return G.power(y, 2 * m) == one && G.mul(x, x) == G.power(y, m) &&
           G.mul(G.mul(x, y), G.inverse_of(x)) == G.inverse_of(y) &&
           G.generated_order({x, y}) == G.order();
  }
  if (!p.x || !p.y || !p.z) return false;
  const std::size_t x = *p.x, y = *p.y, z = *p.z;
  const auto c = static_cast<std::size_t>(p.cls.exceptional_c());
  const std::size_t x2 = G.mul(x, x);
  const std::size_t xyz = G.mul(G.mul(x, y), z);
  return x2 == G.power(y, 3) && x2 == G.power(z, c) && x2 == xyz && G.mul(xyz, xyz) == one &&
         G.generated_order({y, z}) == G.order();
}

inline PresentationGenerators find_presentation_generators(const FiniteUnitGroup& G,
                                                           const GroupClass& cls) {
  using K = GroupClass::Kind;
  PresentationGenerators p{cls, std::nullopt, std::nullopt, std::nullopt};
  const std::size_t N = G.order();
  if (cls.kind == K::Cyclic) {
    for (std::size_t y = 0; y < N; ++y)
      if (G.element_order(y) == N) {
        p.y = y;
        return p;
      }
  } else if (cls.kind == K::BinaryDihedral) {
    for (std::size_t y = 0; y < N; ++y) {
      if (G.element_order(y) != static_cast<std::size_t>(2 * cls.m)) continue;
      if (auto x = detail::find_dihedral_x(G, y, cls.m)) {
        p.x = *x;
        p.y = y;
        if (verify_presentation(G, p)) return p;
      }
    }
  } else {
    const auto zo = static_cast<std::size_t>(2 * cls.exceptional_c());
    for (std::size_t y = 0; y < N; ++y) {
      if (G.element_order(y) != 6) continue;
      for (std::size_t z = 0; z < N; ++z) {
        if (G.element_order(z) != zo) continue;
        p.x = G.mul(y, z);
        p.y = y;
        p.z = z;
        if (verify_presentation(G, p)) return p;
      }
    }
  }
  throw ConsistencyError("no presentation generators found for " + cls.to_string());
}

/// Rank of the 4n-coordinate matrix of all elements equals 4n.
inline bool spans_Q_basis(const FiniteUnitGroup& G) {
  const std::size_t dim = G[0].algebra().rational_dimension();
  RatMatrix rows(0, dim);
  for (const auto& e : G.elements()) rows.append_row(e.coords());
  return rank_over_Q(rows) == dim;
}

/// Well-roundedness of (Lambda, b_alpha) predicted from [K:Q] and the class
/// of Lambda^1.
inline bool predict_well_rounded(std::size_t n, const GroupClass& cls) {
  using K = GroupClass::Kind;
  const bool dihedral_ok =
      cls.kind == K::BinaryDihedral && euler_phi(2 * cls.m) == static_cast<long>(2 * n);
  if (n == 1) return cls.kind == K::BinaryTetrahedral || dihedral_ok;
  if (n == 2)
    return cls.kind == K::BinaryOctahedral || cls.kind == K::BinaryIcosahedral || dihedral_ok;
  return dihedral_ok;
}

/// Dihedral: {beta y^k x^l}, l = 0, 1 outer, k < phi(2m).
/// Exceptional: {beta z^k y^l}, l = 0, 1 outer, k < phi(order of z).
/// Throws unless the result has rank 4n.
inline std::vector<QuatElem> explicit_minimal_basis(const FiniteUnitGroup& G,
                                                    const PresentationGenerators& p,
                                                    const QuatElem& beta) {
  using K = GroupClass::Kind;
  std::vector<QuatElem> out;
  const auto& alg = beta.algebra();
  auto powq = [&](std::size_t g, long e) {
    QuatElem r = alg.one();
    for (long k = 0; k < e; ++k) r = r * G[g];
    return r;
  };
  if (p.cls.kind == K::BinaryDihedral) {
    const long f = euler_phi(2 * p.cls.m);
    for (long l = 0; l < 2; ++l)
      for (long k = 0; k < f; ++k) out.push_back(beta * powq(*p.y, k) * powq(*p.x, l));
  } else if (p.cls.is_exceptional()) {
    const long f = euler_phi(static_cast<long>(G.element_order(*p.z)));
    for (long l = 0; l < 2; ++l)
      for (long k = 0; k < f; ++k) out.push_back(beta * powq(*p.z, k) * powq(*p.y, l));
  } else {
    throw PreconditionError("explicit_minimal_basis: cyclic groups give no basis");
  }
  const std::size_t dim = alg.rational_dimension();
  RatMatrix rows(0, dim);
  for (const auto& e : out) rows.append_row(e.coords());
  if (out.size() != dim || rank_over_Q(rows) != dim)
    throw ConsistencyError("explicit minimal basis has rank " + std::to_string(rank_over_Q(rows)) +
                           " < " + std::to_string(dim));
  return out;
}

struct WellRoundedConsistency {
  bool direct = false;
  bool spans_basis = false;
  bool predicted = false;
  GroupClass cls;
  bool consistent() const { return direct == spans_basis && spans_basis == predicted; }
};

/// Cross-checks the direct lattice test, the Q-basis test on Lambda^1 and the
/// predictor. Throws ConsistencyError on disagreement.
inline WellRoundedConsistency wellrounded_consistency(const QuatModule& order, const Rational& alpha,
                                                      const EnumerationOptions& opts = {}) {
  if (alpha <= 0) throw PreconditionError("wellrounded_consistency: alpha must be positive");
  WellRoundedConsistency r;
  r.direct = is_well_rounded(build_lattice(order, alpha), opts).well_rounded;
  const FiniteUnitGroup G = enumerate_norm_one(order, opts);
  r.spans_basis = spans_Q_basis(G);
  r.cls = classify(G);
  r.predicted = predict_well_rounded(order.algebra().field().degree(), r.cls);
  if (!r.consistent())
    throw ConsistencyError("well-roundedness disagreement: direct=" + std::to_string(r.direct) +
                           " spans=" + std::to_string(r.spans_basis) +
                           " predicted=" + std::to_string(r.predicted));
  return r;
}

}  // namespace quatlat
