#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "quatlat/core/enumerate.hpp"
#include "quatlat/core/lll.hpp"
#include "quatlat/order/module.hpp"

namespace quatlat {

/// The pair (I, b_alpha) with its exact Gram matrix over the presentation
/// basis of I.
class IdealLattice {
 public:
  IdealLattice(QuatModule module, FieldElem alpha, RatMatrix gram)
      : module_(std::move(module)), alpha_(std::move(alpha)), gram_(std::move(gram)) {}

  const QuatModule& module() const { return module_; }
  const FieldElem& alpha() const { return alpha_; }
  const RatMatrix& gram() const { return gram_; }
  std::size_t dimension() const { return gram_.rows(); }
  const std::vector<QuatElem>& basis() const { return module_.basis(); }
  /// The quaternion with coordinates v over the basis.
  QuatElem element(std::span<const Integer> v) const { return module_.element(v); }
  Rational norm(std::span<const Integer> v) const { return quadratic_form(gram_, v, v); }

 private:
  QuatModule module_;
  FieldElem alpha_;
  RatMatrix gram_;
};

/// Gram matrix of b_alpha on an arbitrary list of elements.
inline RatMatrix trace_form_gram(const FieldElem& alpha, const std::vector<QuatElem>& b) {
  RatMatrix g(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j) {
      g(i, j) = trace_form_unchecked(alpha, b[i], b[j]);
      g(j, i) = g(i, j);
    }
  return g;
}

namespace detail {
inline void check_form_hypotheses(const QuatAlgebra& alg, const FieldElem& alpha) {
  if (!alg.is_totally_definite())
    throw PreconditionError("algebra " + alg.to_string() +
                            " is not totally definite; b_alpha is not positive definite");
  if (!(alpha.field() == alg.field())) throw PreconditionError("alpha lies in a different field");
  if (!is_totally_positive(alpha))
    throw PreconditionError("alpha = " + alpha.to_string() + " is not totally positive");
}
}  // namespace detail

inline IdealLattice build_lattice(const QuatModule& module, const FieldElem& alpha) {
  detail::check_form_hypotheses(module.algebra(), alpha);
  return IdealLattice(module, alpha, trace_form_gram(alpha, module.basis()));
}

inline IdealLattice build_lattice(const QuatModule& module, const Rational& alpha) {
  return build_lattice(module, module.algebra().field().from_rational(alpha));
}

namespace detail {
// Enclosure of sqrt(x) for x >= 0, width about 2^-bits.
inline RatInterval sqrt_interval(const RatInterval& x, unsigned bits) {
  if (x.lo < 0) throw ConsistencyError("square root of a possibly negative quantity");
  Rational scale(1);
  mpq_mul_2exp(scale.get_mpq_t(), scale.get_mpq_t(), 2 * bits);
  Rational unit(1);
  mpq_div_2exp(unit.get_mpq_t(), unit.get_mpq_t(), bits);
  Rational lo = Rational(isqrt_floor(x.lo * scale)) * unit;
  Rational hi = Rational(isqrt_floor(x.hi * scale) + 1) * unit;
  return {lo, hi};
}
}  // namespace detail

/// Floating generator matrix: row k is sigma(b_k) with, for each embedding m,
/// sqrt(2) (alpha_m x0, alpha_m sqrt(-a) x1, alpha_m sqrt(-b) x2, alpha_m sqrt(ab) x3)
/// evaluated at sigma_m, alpha_m = sqrt(sigma_m(alpha)). Entries are midpoints
/// of validated enclosures of width below 2^-precision_bits.
inline std::vector<std::vector<double>> generator_matrix_real(const IdealLattice& L,
                                                              unsigned precision_bits = 64) {
  const auto& alg = L.module().algebra();
  const auto& K = alg.field();
  const std::size_t n = K.degree();
  const unsigned bits = precision_bits + 16;
  const FieldElem two_alpha = Rational(2) * L.alpha();
  const FieldElem weights[4] = {two_alpha, -(two_alpha * alg.a()), -(two_alpha * alg.b()),
                                two_alpha * alg.ab()};
  std::vector<std::vector<RatInterval>> scale(4);
  for (std::size_t l = 0; l < 4; ++l) {
    auto e = embed_real(weights[l], bits);
    for (auto& v : e) v = detail::sqrt_interval(v, bits);
    scale[l] = std::move(e);
  }
  std::vector<std::vector<double>> out;
  for (const auto& b : L.basis()) {
    std::vector<double> row(4 * n, 0.0);
    for (std::size_t l = 0; l < 4; ++l) {
      if (b[l].is_zero()) continue;
      auto e = embed_real(b[l], bits);
      for (std::size_t m = 0; m < n; ++m) row[4 * m + l] = to_double((scale[l][m] * e[m]).midpoint());
    }
    out.push_back(std::move(row));
  }
  return out;
}

/// S(L) together with the minimum and the rank of the vectors.
struct MinimalVectorSet {
  Rational min_norm;
  std::vector<IntVector> vectors;
  std::size_t rank = 0;
};

/// All vectors of minimal norm of a positive definite Gram: LLL, then
/// enumeration up to the smallest reduced diagonal entry, keeping the
/// least norm found. Works on the integer-scaled Gram.
inline MinimalVectorSet minimal_vectors_of_gram(const RatMatrix& gram,
                                                const EnumerationOptions& opts = {}) {
  const Integer d = common_denominator(gram);
  const RatMatrix g = to_rational(to_integer(gram, d));
  const std::size_t n = g.rows();
  LllResult red = lll_reduce(g);
  Rational bound = red.gram(0, 0);
  for (std::size_t i = 1; i < n; ++i) bound = std::min(bound, red.gram(i, i));

  EnumerationOptions inner = opts;
  inner.precondition = false;
  auto raw = enumerate_up_to(red.gram, bound, inner);
  MinimalVectorSet out;
  out.min_norm = bound;
  for (const auto& v : raw) out.min_norm = std::min(out.min_norm, quadratic_form(red.gram, v, v));
  RatMatrix rows(0, n);
  for (const auto& v : raw) {
    if (quadratic_form(red.gram, v, v) != out.min_norm) continue;
    IntVector w(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] != 0)
        for (std::size_t j = 0; j < n; ++j) w[j] += v[i] * red.transform(i, j);
    std::vector<Rational> wr(w.begin(), w.end());
    rows.append_row(wr);
    out.vectors.push_back(std::move(w));
  }
  std::sort(out.vectors.begin(), out.vectors.end());
  out.rank = rank_over_Q(rows);
  out.min_norm /= Rational(d);
  return out;
}

inline MinimalVectorSet minimal_vectors(const IdealLattice& L, const EnumerationOptions& opts = {}) {
  return minimal_vectors_of_gram(L.gram(), opts);
}

inline Rational minimum(const IdealLattice& L, const EnumerationOptions& opts = {}) {
  return minimal_vectors(L, opts).min_norm;
}

struct WellRoundedResult {
  bool well_rounded = false;
  /// Minimal vectors forming a Q-basis when well rounded (greedy selection).
  std::vector<IntVector> witness;
};

inline WellRoundedResult well_rounded_from(const MinimalVectorSet& s, std::size_t dim) {
  WellRoundedResult out;
  RatMatrix rows(0, dim);
  for (const auto& v : s.vectors) {
    if (out.witness.size() == dim) break;
    std::vector<Rational> vr(v.begin(), v.end());
    RatMatrix trial = rows;
    trial.append_row(vr);
    if (rank_over_Q(trial) == rows.rows() + 1) {
      rows = std::move(trial);
      out.witness.push_back(v);
    }
  }
  out.well_rounded = out.witness.size() == dim;
  if (!out.well_rounded) out.witness.clear();
  return out;
}

inline WellRoundedResult is_well_rounded(const IdealLattice& L, const EnumerationOptions& opts = {}) {
  return well_rounded_from(minimal_vectors(L, opts), L.dimension());
}

/// minimum^n >= (2n)^n N(alpha) N(nrd I), compared exactly.
struct LowerBoundCheck {
  long two_n = 0;
  Rational norm_alpha;
  Rational norm_nrd;
  Rational minimum;
  Rational lhs;  // minimum^n
  Rational rhs;  // (2n)^n N(alpha) N(nrd I)
  bool holds = false;
  bool tight = false;
};

inline LowerBoundCheck min_lower_bound(const IdealLattice& L, const Rational& min_norm) {
  const unsigned long n = L.module().algebra().field().degree();
  LowerBoundCheck c;
  c.two_n = static_cast<long>(2 * n);
  c.norm_alpha = norm_Q(L.alpha());
  c.norm_nrd = norm_of_ok_ideal(reduced_norm_ideal(L.module()));
  c.minimum = min_norm;
  c.lhs = pow(min_norm, n);
  c.rhs = pow(Rational(c.two_n), n) * c.norm_alpha * c.norm_nrd;
  c.holds = c.lhs >= c.rhs;
  c.tight = c.lhs == c.rhs;
  return c;
}

inline LowerBoundCheck min_lower_bound(const IdealLattice& L, const EnumerationOptions& opts = {}) {
  return min_lower_bound(L, minimum(L, opts));
}

/// Outcome of the one-sided similarity test.
struct SimilarityCertificate {
  enum class Verdict { Disproven, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> reasons;
  Rational det_ratio;        // det G2 / det G1
  std::string forced_scale;  // r with G2 ~ r G1
  std::string forced_minimum;
  Rational min1, min2;
  std::size_t count1 = 0, count2 = 0;
  bool disproven() const { return verdict == Verdict::Disproven; }
};

namespace detail {

// Writes s^(1/e) with square factors pulled out when e = 2.
inline std::string radical_string(const Rational& coef, const Rational& s, unsigned long e) {
  if (e == 1) return to_string(coef * s);
  if (e == 2) {
    // s = (p/q) -> sqrt(p q) / q; pull squares out of p q.
    Integer pq = s.get_num() * s.get_den();
    Integer outside = 1, inside = 1;
    Integer rest = pq;
    for (Integer p = 2; p * p <= rest; ++p) {
      while (rest % (p * p) == 0) {
        rest /= p * p;
        outside *= p;
      }
    }
    inside = rest;
    Rational c = coef * Rational(outside) / Rational(s.get_den());
    if (inside == 1) return to_string(c);
    // p sqrt(r) / q
    const Integer& cn = c.get_num();
    std::string out = cn == 1 ? "" : cn == -1 ? "-" : cn.get_str();
    out += "√" + inside.get_str();
    if (c.get_den() != 1) out += "/" + c.get_den().get_str();
    return out;
  }
  return (coef == 1 ? "" : to_string(coef) + "*") + "(" + to_string(s) + ")^(1/" +
         std::to_string(e) + ")";
}

inline bool is_integral_matrix(const RatMatrix& m) {
  for (const auto& v : m.data())
    if (v.get_den() != 1) return false;
  return true;
}

}  // namespace detail

/// Certificate of non-similarity. If G2 = r U G1 U^T then r^D = det G2 / det G1,
/// min(L2) = r min(L1) and the minimal vector counts agree; a violated
/// consequence disproves similarity. Never proves similarity.
inline SimilarityCertificate similarity_certificate(const RatMatrix& g1, const RatMatrix& g2,
                                                    const EnumerationOptions& opts = {}) {
  if (g1.rows() != g2.rows())
    throw PreconditionError("similarity_certificate: lattices of different dimension");
  const unsigned long D = g1.rows();
  SimilarityCertificate c;
  c.det_ratio = det_exact(g2) / det_exact(g1);
  const auto s1 = minimal_vectors_of_gram(g1, opts), s2 = minimal_vectors_of_gram(g2, opts);
  c.min1 = s1.min_norm;
  c.min2 = s2.min_norm;
  c.count1 = s1.vectors.size();
  c.count2 = s2.vectors.size();

  // r = ratio^(1/D) = s^(1/e) with e the least divisor of D making s rational.
  unsigned long e = D;
  Rational s = c.det_ratio;
  for (unsigned long cand = 1; cand <= D; ++cand) {
    if (D % cand != 0) continue;
    Rational root;
    if (exact_root(c.det_ratio, D / cand, root)) {
      e = cand;
      s = root;
      break;
    }
  }
  c.forced_scale = detail::radical_string(Rational(1), s, e);
  c.forced_minimum = detail::radical_string(c.min1, s, e);
  if (e == 1) {
    if (s * c.min1 != c.min2) {
      c.reasons.push_back("forced minimum " + c.forced_minimum + " differs from minimum " +
                          to_string(c.min2));
    }
  } else if (detail::is_integral_matrix(g2)) {
    c.reasons.push_back("forced minimum " + c.forced_minimum + " non-integral");
  } else {
    c.reasons.push_back("forced minimum " + c.forced_minimum + " irrational, Gram is rational");
  }
  if (c.count1 != c.count2)
    c.reasons.push_back("minimal vector counts " + std::to_string(c.count1) + " vs " +
                        std::to_string(c.count2));
  if (!c.reasons.empty()) c.verdict = SimilarityCertificate::Verdict::Disproven;
  return c;
}

inline SimilarityCertificate similarity_certificate(const IdealLattice& L1, const IdealLattice& L2,
                                                    const EnumerationOptions& opts = {}) {
  return similarity_certificate(L1.gram(), L2.gram(), opts);
}

/// Gram of b_alpha on {u^-1 b_k u}.
inline RatMatrix conjugate_lattice_gram(const QuatModule& order, const QuatElem& u,
                                        const FieldElem& alpha) {
  if (reduced_norm(u).is_zero()) throw PreconditionError("conjugating element is not invertible");
  detail::check_form_hypotheses(order.algebra(), alpha);
  const QuatElem ui = inverse(u);
  std::vector<QuatElem> b;
  for (const auto& x : order.basis()) b.push_back(ui * x * u);
  return trace_form_gram(alpha, b);
}

}  // namespace quatlat
