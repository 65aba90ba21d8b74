#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "quatlat/group/norm_one.hpp"
#include "quatlat/io/problem_spec.hpp"
#include "quatlat/io/result_document.hpp"

namespace quatlat {

struct AnalyzeOptions {
  bool embed = false;
  unsigned precision_bits = 64;
  /// Replaces the spec's alpha ("p/q" or comma separated coefficients).
  std::optional<std::string> alpha;
  EnumerationOptions enumeration;
};

/// Largest |M M^T - G| entry.
inline double max_gram_deviation(const std::vector<std::vector<double>>& m, const RatMatrix& g) {
  double worst = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      long double acc = 0;
      for (std::size_t k = 0; k < m[i].size(); ++k)
        acc += static_cast<long double>(m[i][k]) * m[j][k];
      worst = std::max(worst, static_cast<double>(std::fabs(acc - static_cast<long double>(to_double(g(i, j))))));
    }
  return worst;
}

/// The full pipeline: Gram, minimum, minimal vectors, well-roundedness,
/// Lambda^1 and its class, the predictor, the lower bound and, for ideals,
/// the similarity test against the order lattice.
inline ResultDocument analyze(const ProblemSpec& spec, const std::string& input_text,
                              const AnalyzeOptions& opts = {}) {
  const auto& eo = opts.enumeration;
  ResultDocument d;
  d.input_hash = fnv1a_hex(input_text);
  d.name = spec.name;
  d.target = spec.ideal ? "ideal" : "order";
  d.degree = spec.field.degree();
  d.dimension = spec.algebra.rational_dimension();
  const FieldElem alpha = opts.alpha ? parse_alpha_text(spec.field, *opts.alpha) : spec.alpha;
  d.alpha = alpha.to_string();

  const QuatModule& target = spec.target();
  const IdealLattice L = build_lattice(target, alpha);
  d.gram = L.gram();
  d.det = det_exact(L.gram());
  const MinimalVectorSet S = minimal_vectors(L, eo);
  d.minimum = S.min_norm;
  d.minimal_vector_count = S.vectors.size();
  const WellRoundedResult wr = well_rounded_from(S, L.dimension());
  d.well_rounded = wr.well_rounded;
  d.witness_basis = wr.witness;

  d.is_order = is_order(spec.order);
  if (spec.ideal) {
    d.is_right_ideal = is_right_ideal(*spec.ideal, spec.order);
    d.is_integral = is_integral(*spec.ideal, spec.order);
  }
  const LowerBoundCheck lb = min_lower_bound(L, S.min_norm);
  d.lower_bound_check = {lb.lhs, lb.rhs, lb.norm_alpha, lb.norm_nrd, lb.holds, lb.tight};

  const FiniteUnitGroup G = enumerate_norm_one(spec.order, eo);
  const GroupClass cls = classify(G);
  const PresentationGenerators gens = find_presentation_generators(G, cls);
  d.unit_group.order = G.order();
  d.unit_group.cls = cls.name();
  d.unit_group.m = cls.m;
  if (gens.x) d.unit_group.generators["x"] = G[*gens.x].to_string();
  if (gens.y) d.unit_group.generators["y"] = G[*gens.y].to_string();
  if (gens.z) d.unit_group.generators["z"] = G[*gens.z].to_string();
  d.unit_group.spans_Q_basis = spans_Q_basis(G);
  d.predicted_well_rounded = predict_well_rounded(spec.field.degree(), cls);

  // The characterization is stated for rational alpha; otherwise check at 1.
  const std::optional<Rational> qa = alpha.as_rational();
  const FieldElem alpha_c = qa ? alpha : spec.field.one();
  if (!spec.ideal && qa) {
    d.order_well_rounded = d.well_rounded;
  } else {
    d.order_well_rounded = is_well_rounded(build_lattice(spec.order, alpha_c), eo).well_rounded;
  }
  d.consistent = d.order_well_rounded == d.unit_group.spans_Q_basis &&
                 d.unit_group.spans_Q_basis == d.predicted_well_rounded && lb.holds;
  // Right ideals of an order with well-rounded lattice are well rounded.
  if (spec.ideal && d.predicted_well_rounded && !d.well_rounded) d.consistent = false;

  if (d.predicted_well_rounded && cls.kind != GroupClass::Kind::Cyclic) {
    const QuatElem beta = spec.ideal ? L.element(wr.witness.front()) : spec.algebra.one();
    const auto B = explicit_minimal_basis(G, gens, beta);
    ExplicitBasisDoc e;
    e.gram = trace_form_gram(alpha, B);
    e.det = det_exact(e.gram);
    e.spans_lattice = IntLatticeBasis::from_rows(detail::coordinate_rows(B, d.dimension)) ==
                      target.lattice();
    e.all_minimal = true;
    for (std::size_t i = 0; i < e.gram.rows(); ++i)
      if (e.gram(i, i) != d.minimum) e.all_minimal = false;
    // Only asserted for rational alpha; a unit of norm other than one can
    // give shorter vectors otherwise.
    if (!e.all_minimal && qa) d.consistent = false;
    d.explicit_minimal_basis = std::move(e);
  }

  if (spec.ideal) {
    const auto c = similarity_certificate(build_lattice(spec.order, alpha), L, eo);
    d.similarity_to_order = SimilarityDoc{c.disproven() ? "disproven" : "inconclusive", c.reasons,
                                          c.det_ratio, c.forced_scale, c.forced_minimum};
  }

  if (opts.embed) {
    EmbeddingDoc e;
    e.precision_bits = opts.precision_bits;
    e.matrix = generator_matrix_real(L, opts.precision_bits);
    e.max_gram_deviation = max_gram_deviation(e.matrix, L.gram());
    d.embedding = std::move(e);
  }
  return d;
}

}  // namespace quatlat
