#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "quatlat/core/lattice_basis.hpp"
#include "quatlat/quat/algebra.hpp"

namespace quatlat {

/// Rank-4n Z-module in A over the fixed Q-basis {w_k, w_k i, w_k j, w_k ij}.
/// Equality compares the canonical HNF representation. The module also keeps
/// the Z-basis it was presented with, which fixes the Gram matrix ordering.
class QuatModule {
 public:
  QuatModule(QuatAlgebra alg, IntLatticeBasis lattice, std::vector<QuatElem> presentation)
      : alg_(std::move(alg)), lat_(std::move(lattice)), pres_(std::move(presentation)) {}

  const QuatAlgebra& algebra() const { return alg_; }
  std::size_t dimension() const { return alg_.rational_dimension(); }
  const IntLatticeBasis& lattice() const { return lat_; }

  /// The presentation Z-basis (4n elements).
  const std::vector<QuatElem>& basis() const { return pres_; }

  /// Z-basis read off the canonical HNF.
  std::vector<QuatElem> hnf_basis() const {
    std::vector<QuatElem> out;
    const RatMatrix r = lat_.rational_basis();
    for (std::size_t i = 0; i < r.rows(); ++i) out.push_back(alg_.from_coords(r.row(i)));
    return out;
  }

  /// Coordinates of x over the presentation basis, if x lies in the module.
  std::optional<std::vector<Integer>> coordinates(const QuatElem& x) const {
    if (!contains(x)) return std::nullopt;
    const auto inv = presentation_inverse();
    const auto c = x.coords();
    std::vector<Integer> out(dimension());
    for (std::size_t j = 0; j < dimension(); ++j) {
      Rational acc(0);
      for (std::size_t k = 0; k < dimension(); ++k) acc += c[k] * inv(k, j);
      if (acc.get_den() != 1) throw ConsistencyError("presentation basis does not span the module");
      out[j] = acc.get_num();
    }
    return out;
  }

  /// Element sum_k v_k b_k over the presentation basis.
  QuatElem element(std::span<const Integer> v) const {
    QuatElem acc = alg_.zero();
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) acc = acc + Rational(v[k]) * pres_[k];
    return acc;
  }

  bool contains(const QuatElem& x) const {
    const auto c = x.coords();
    return lat_.contains(c);
  }
  bool contains(const QuatModule& o) const { return lat_.contains(o.lat_); }

  /// Replaces the presentation basis by another Z-basis of the same module.
  QuatModule with_presentation(std::vector<QuatElem> basis) const;

  friend bool operator==(const QuatModule& a, const QuatModule& b) {
    return a.alg_ == b.alg_ && a.lat_ == b.lat_;
  }

 private:
  RatMatrix presentation_inverse() const {
    RatMatrix p(dimension(), dimension());
    for (std::size_t i = 0; i < pres_.size(); ++i) {
      const auto c = pres_[i].coords();
      for (std::size_t j = 0; j < dimension(); ++j) p(i, j) = c[j];
    }
    auto inv = inverse(p);
    if (!inv) throw ConsistencyError("presentation basis is singular");
    return *inv;
  }

  QuatAlgebra alg_;
  IntLatticeBasis lat_;
  std::vector<QuatElem> pres_;
};

namespace detail {

inline RatMatrix coordinate_rows(const std::vector<QuatElem>& elems, std::size_t dim) {
  RatMatrix rows(elems.size(), dim);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto c = elems[i].coords();
    for (std::size_t j = 0; j < dim; ++j) rows(i, j) = c[j];
  }
  return rows;
}

inline void check_algebra(const QuatAlgebra& alg, const std::vector<QuatElem>& elems) {
  for (const auto& e : elems)
    if (!(e.algebra() == alg)) throw PreconditionError("element from a different algebra");
}

// Span of arbitrary elements with the HNF basis as presentation.
inline QuatModule module_from_span(const QuatAlgebra& alg, const std::vector<QuatElem>& elems,
                                   const char* what) {
  check_algebra(alg, elems);
  const std::size_t dim = alg.rational_dimension();
  auto lat = IntLatticeBasis::from_rows(coordinate_rows(elems, dim));
  if (!lat.is_full_rank())
    throw PreconditionError(std::string(what) + ": span has rank " + std::to_string(lat.rank()) +
                            " < " + std::to_string(dim));
  QuatModule m(alg, lat, {});
  return QuatModule(alg, lat, m.hnf_basis());
}

}  // namespace detail

inline QuatModule QuatModule::with_presentation(std::vector<QuatElem> basis) const {
  if (basis.size() != dimension())
    throw PreconditionError("presentation basis must have 4n elements");
  auto lat = IntLatticeBasis::from_rows(detail::coordinate_rows(basis, dimension()));
  if (!(lat == lat_)) throw PreconditionError("presentation basis spans a different module");
  return QuatModule(alg_, lat_, std::move(basis));
}

/// Module with the given Z-basis (exactly 4n elements, rank 4n).
inline QuatModule module_from_zbasis(const QuatAlgebra& alg, std::vector<QuatElem> elems) {
  const std::size_t dim = alg.rational_dimension();
  if (elems.size() != dim)
    throw PreconditionError("module_from_zbasis: expected " + std::to_string(dim) +
                            " elements, got " + std::to_string(elems.size()));
  detail::check_algebra(alg, elems);
  auto lat = IntLatticeBasis::from_rows(detail::coordinate_rows(elems, dim));
  if (!lat.is_full_rank())
    throw PreconditionError("module_from_zbasis: elements have rank " +
                            std::to_string(lat.rank()) + " < " + std::to_string(dim));
  return QuatModule(alg, std::move(lat), std::move(elems));
}

/// Z-span of {w_k g}: the O_K-module generated by `gens`.
inline QuatModule module_from_ok_generators(const QuatAlgebra& alg,
                                            const std::vector<QuatElem>& gens) {
  if (gens.empty()) throw PreconditionError("module_from_ok_generators: no generators");
  std::vector<QuatElem> all;
  const auto ib = alg.field().integral_basis();
  for (const auto& g : gens)
    for (const auto& w : ib) all.push_back(w * g);
  return detail::module_from_span(alg, all, "module_from_ok_generators");
}

/// Z-span of all products b_i c_j.
inline QuatModule module_product(const QuatModule& I, const QuatModule& J) {
  if (!(I.algebra() == J.algebra())) throw PreconditionError("module_product: different algebras");
  std::vector<QuatElem> prods;
  const auto bi = I.hnf_basis(), bj = J.hnf_basis();
  for (const auto& x : bi)
    for (const auto& y : bj) prods.push_back(x * y);
  return detail::module_from_span(I.algebra(), prods, "module_product");
}

/// The right ideal sum_g g Lambda: Z-span of {g b} over the basis b of Lambda.
inline QuatModule right_ideal_from_generators(const QuatModule& order,
                                              const std::vector<QuatElem>& gens) {
  if (gens.empty()) throw PreconditionError("right_ideal_from_generators: no generators");
  std::vector<QuatElem> prods;
  const auto b = order.hnf_basis();
  for (const auto& g : gens)
    for (const auto& x : b) prods.push_back(g * x);
  return detail::module_from_span(order.algebra(), prods, "right_ideal_from_generators");
}

/// x * M (presentation basis transported).
inline QuatModule left_multiply(const QuatElem& x, const QuatModule& M) {
  std::vector<QuatElem> b;
  for (const auto& e : M.basis()) b.push_back(x * e);
  return module_from_zbasis(M.algebra(), std::move(b));
}

/// M * x (presentation basis transported).
inline QuatModule right_multiply(const QuatModule& M, const QuatElem& x) {
  std::vector<QuatElem> b;
  for (const auto& e : M.basis()) b.push_back(e * x);
  return module_from_zbasis(M.algebra(), std::move(b));
}

inline QuatModule scale(const Rational& s, const QuatModule& M) {
  return left_multiply(M.algebra().scalar(M.algebra().field().from_rational(s)), M);
}

/// u^-1 M u with basis {u^-1 b_k u}.
inline QuatModule conjugate_module(const QuatModule& M, const QuatElem& u) {
  const QuatElem ui = inverse(u);
  std::vector<QuatElem> b;
  for (const auto& e : M.basis()) b.push_back(ui * e * u);
  return module_from_zbasis(M.algebra(), std::move(b));
}

/// 1 in M, M M subset M, and w_k M subset M for the integral basis.
inline bool is_order(const QuatModule& M) {
  const auto& alg = M.algebra();
  if (!M.contains(alg.one())) return false;
  const auto b = M.hnf_basis();
  for (const auto& w : alg.field().integral_basis())
    for (const auto& x : b)
      if (!M.contains(w * x)) return false;
  for (const auto& x : b)
    for (const auto& y : b)
      if (!M.contains(x * y)) return false;
  return true;
}

namespace detail {

inline IntLatticeBasis intersect_all(const std::vector<QuatModule>& mods) {
  IntLatticeBasis dual_sum = mods.front().lattice().dual();
  for (std::size_t k = 1; k < mods.size(); ++k) dual_sum = dual_sum + mods[k].lattice().dual();
  return dual_sum.dual();
}

}  // namespace detail

/// O_R(I) = {x : I x subset I} = intersection of b^-1 I over the basis b of I.
inline QuatModule right_order(const QuatModule& I) {
  std::vector<QuatModule> parts;
  for (const auto& b : I.hnf_basis()) parts.push_back(left_multiply(inverse(b), I));
  QuatModule m(I.algebra(), detail::intersect_all(parts), {});
  return QuatModule(I.algebra(), m.lattice(), m.hnf_basis());
}

/// O_L(I) = {x : x I subset I} = intersection of I b^-1.
inline QuatModule left_order(const QuatModule& I) {
  std::vector<QuatModule> parts;
  for (const auto& b : I.hnf_basis()) parts.push_back(right_multiply(I, inverse(b)));
  QuatModule m(I.algebra(), detail::intersect_all(parts), {});
  return QuatModule(I.algebra(), m.lattice(), m.hnf_basis());
}

/// I Lambda subset I.
inline bool is_right_ideal(const QuatModule& I, const QuatModule& order) {
  for (const auto& x : I.hnf_basis())
    for (const auto& y : order.hnf_basis())
      if (!I.contains(x * y)) return false;
  return true;
}

/// I subset Lambda.
inline bool is_integral(const QuatModule& I, const QuatModule& order) { return order.contains(I); }

/// Least positive integer d with d I subset Lambda, and d I.
inline std::pair<FieldElem, QuatModule> scale_to_integral(const QuatModule& I,
                                                          const QuatModule& order) {
  const RatMatrix ob = order.lattice().rational_basis();
  auto inv = inverse(ob);
  if (!inv) throw ConsistencyError("order basis is singular");
  const RatMatrix coords = I.lattice().rational_basis() * *inv;
  const Integer d = common_denominator(coords);
  return {I.algebra().field().from_rational(Rational(d)), scale(Rational(d), I)};
}

/// Fractional O_K-ideal stored over the integral basis of K.
class OKIdealRep {
 public:
  OKIdealRep(NumberField K, IntLatticeBasis lattice) : K_(std::move(K)), lat_(std::move(lattice)) {}

  /// O_K-module generated by `gens`.
  static OKIdealRep from_generators(const NumberField& K, const std::vector<FieldElem>& gens) {
    const std::size_t n = K.degree();
    RatMatrix rows(0, n);
    for (const auto& g : gens)
      for (const auto& w : K.integral_basis()) rows.append_row(K.integral_coords(w * g));
    auto lat = IntLatticeBasis::from_rows(rows);
    if (!lat.is_full_rank()) throw PreconditionError("O_K-ideal generators span rank < n");
    return OKIdealRep(K, std::move(lat));
  }

  const NumberField& field() const { return K_; }
  const IntLatticeBasis& lattice() const { return lat_; }
  bool contains(const FieldElem& x) const { return lat_.contains(K_.integral_coords(x)); }

  friend bool operator==(const OKIdealRep& a, const OKIdealRep& b) {
    return a.K_ == b.K_ && a.lat_ == b.lat_;
  }

 private:
  NumberField K_;
  IntLatticeBasis lat_;
};

/// Absolute norm: index [O_K : J] for integral J, N(dJ)/d^n in general.
inline Rational norm_of_ok_ideal(const OKIdealRep& J) { return J.lattice().covolume(); }

/// n_{A/K}(I): the O_K-span of nrd(b_i) and nrd(b_i + b_j).
inline OKIdealRep reduced_norm_ideal(const QuatModule& I) {
  const auto b = I.hnf_basis();
  std::vector<FieldElem> gens;
  for (std::size_t i = 0; i < b.size(); ++i) {
    gens.push_back(reduced_norm(b[i]));
    for (std::size_t j = i + 1; j < b.size(); ++j) gens.push_back(reduced_norm(b[i] + b[j]));
  }
  return OKIdealRep::from_generators(I.algebra().field(), gens);
}

}  // namespace quatlat
