#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quatlat/core/matrix.hpp"
#include "quatlat/core/rational.hpp"

namespace quatlat {

inline constexpr const char* kVersion = "0.1.0";

/// 64-bit FNV-1a, hex.
inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 0xf];
  return out;
}

struct LowerBoundDoc {
  Rational lhs, rhs, norm_alpha, norm_nrd;
  bool holds = false, tight = false;
  friend bool operator==(const LowerBoundDoc&, const LowerBoundDoc&) = default;
};

struct UnitGroupDoc {
  std::size_t order = 0;
  std::string cls;
  long m = 0;
  std::map<std::string, std::string> generators;
  bool spans_Q_basis = false;
  friend bool operator==(const UnitGroupDoc&, const UnitGroupDoc&) = default;
};

struct ExplicitBasisDoc {
  RatMatrix gram;
  Rational det;
  bool spans_lattice = false;
  bool all_minimal = false;
  friend bool operator==(const ExplicitBasisDoc&, const ExplicitBasisDoc&) = default;
};

struct SimilarityDoc {
  std::string verdict;
  std::vector<std::string> reasons;
  Rational det_ratio;
  std::string forced_scale, forced_minimum;
  friend bool operator==(const SimilarityDoc&, const SimilarityDoc&) = default;
};

struct EmbeddingDoc {
  unsigned precision_bits = 0;
  std::vector<std::vector<double>> matrix;
  double max_gram_deviation = 0;
  friend bool operator==(const EmbeddingDoc&, const EmbeddingDoc&) = default;
};

/// Output of `analyze`. Exact values are strings "p/q".
struct ResultDocument {
  std::string version = kVersion;
  std::string input_hash;
  std::string name;
  std::string target;  // "order" or "ideal"
  std::size_t degree = 0, dimension = 0;
  std::string alpha;
  RatMatrix gram;
  Rational det;
  Rational minimum;
  std::size_t minimal_vector_count = 0;
  bool well_rounded = false;
  std::vector<std::vector<Integer>> witness_basis;
  bool is_order = false;
  std::optional<bool> is_right_ideal, is_integral;
  LowerBoundDoc lower_bound_check;
  UnitGroupDoc unit_group;
  bool predicted_well_rounded = false;
  bool order_well_rounded = false;
  bool consistent = false;
  std::optional<ExplicitBasisDoc> explicit_minimal_basis;
  std::optional<SimilarityDoc> similarity_to_order;
  std::optional<EmbeddingDoc> embedding;

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

namespace detail {

using json = nlohmann::json;

inline json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline RatMatrix matrix_from_json(const json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    std::vector<Rational> row;
    for (const auto& v : r) row.push_back(parse_rational(v.get<std::string>()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return RatMatrix();
  return RatMatrix::from_rows(rows);
}

}  // namespace detail

inline nlohmann::json to_json(const ResultDocument& d) {
  using detail::json;
  json j;
  j["version"] = d.version;
  j["input_hash"] = d.input_hash;
  j["name"] = d.name;
  j["target"] = d.target;
  j["degree"] = d.degree;
  j["dimension"] = d.dimension;
  j["alpha"] = d.alpha;
  j["gram"] = detail::matrix_json(d.gram);
  j["det"] = to_string(d.det);
  j["minimum"] = to_string(d.minimum);
  j["minimal_vector_count"] = d.minimal_vector_count;
  j["well_rounded"] = d.well_rounded;
  json wb = json::array();
  for (const auto& v : d.witness_basis) {
    json r = json::array();
    for (const auto& x : v) r.push_back(x.get_str());
    wb.push_back(std::move(r));
  }
  j["witness_basis"] = std::move(wb);
  j["is_order"] = d.is_order;
  if (d.is_right_ideal) j["is_right_ideal"] = *d.is_right_ideal;
  if (d.is_integral) j["is_integral"] = *d.is_integral;
  const auto& lb = d.lower_bound_check;
  j["lower_bound_check"] = {{"lhs", to_string(lb.lhs)},           {"rhs", to_string(lb.rhs)},
                            {"norm_alpha", to_string(lb.norm_alpha)}, {"norm_nrd", to_string(lb.norm_nrd)},
                            {"holds", lb.holds},                      {"tight", lb.tight}};
  const auto& ug = d.unit_group;
  j["unit_group"] = {{"order", ug.order},           {"class", ug.cls},
                     {"m", ug.m},                   {"generators", ug.generators},
                     {"spans_Q_basis", ug.spans_Q_basis}};
  j["predicted_well_rounded"] = d.predicted_well_rounded;
  j["order_well_rounded"] = d.order_well_rounded;
  j["consistent"] = d.consistent;
  if (d.explicit_minimal_basis) {
    const auto& e = *d.explicit_minimal_basis;
    j["explicit_minimal_basis"] = {{"gram", detail::matrix_json(e.gram)},
                                   {"det", to_string(e.det)},
                                   {"spans_lattice", e.spans_lattice},
                                   {"all_minimal", e.all_minimal}};
  }
  if (d.similarity_to_order) {
    const auto& s = *d.similarity_to_order;
    j["similarity_to_order"] = {{"verdict", s.verdict},
                                {"reasons", s.reasons},
                                {"det_ratio", to_string(s.det_ratio)},
                                {"forced_scale", s.forced_scale},
                                {"forced_minimum", s.forced_minimum}};
  }
  if (d.embedding) {
    const auto& e = *d.embedding;
    j["embedding"] = {{"precision_bits", e.precision_bits},
                      {"matrix", e.matrix},
                      {"max_gram_deviation", e.max_gram_deviation}};
  }
  return j;
}

/// Inverse of to_json; exact fields round-trip losslessly.
inline ResultDocument result_from_json(const nlohmann::json& j) {
  ResultDocument d;
  d.version = j.at("version").get<std::string>();
  d.input_hash = j.at("input_hash").get<std::string>();
  d.name = j.at("name").get<std::string>();
  d.target = j.at("target").get<std::string>();
  d.degree = j.at("degree").get<std::size_t>();
  d.dimension = j.at("dimension").get<std::size_t>();
  d.alpha = j.at("alpha").get<std::string>();
  d.gram = detail::matrix_from_json(j.at("gram"));
  d.det = parse_rational(j.at("det").get<std::string>());
  d.minimum = parse_rational(j.at("minimum").get<std::string>());
  d.minimal_vector_count = j.at("minimal_vector_count").get<std::size_t>();
  d.well_rounded = j.at("well_rounded").get<bool>();
  for (const auto& r : j.at("witness_basis")) {
    std::vector<Integer> v;
    for (const auto& x : r) v.emplace_back(x.get<std::string>());
    d.witness_basis.push_back(std::move(v));
  }
  d.is_order = j.at("is_order").get<bool>();
  if (j.contains("is_right_ideal")) d.is_right_ideal = j.at("is_right_ideal").get<bool>();
  if (j.contains("is_integral")) d.is_integral = j.at("is_integral").get<bool>();
  const auto& lb = j.at("lower_bound_check");
  d.lower_bound_check = {parse_rational(lb.at("lhs").get<std::string>()),
                         parse_rational(lb.at("rhs").get<std::string>()),
                         parse_rational(lb.at("norm_alpha").get<std::string>()),
                         parse_rational(lb.at("norm_nrd").get<std::string>()),
                         lb.at("holds").get<bool>(), lb.at("tight").get<bool>()};
  const auto& ug = j.at("unit_group");
  d.unit_group.order = ug.at("order").get<std::size_t>();
  d.unit_group.cls = ug.at("class").get<std::string>();
  d.unit_group.m = ug.at("m").get<long>();
  d.unit_group.generators = ug.at("generators").get<std::map<std::string, std::string>>();
  d.unit_group.spans_Q_basis = ug.at("spans_Q_basis").get<bool>();
  d.predicted_well_rounded = j.at("predicted_well_rounded").get<bool>();
  d.order_well_rounded = j.at("order_well_rounded").get<bool>();
  d.consistent = j.at("consistent").get<bool>();
  if (j.contains("explicit_minimal_basis")) {
    const auto& e = j.at("explicit_minimal_basis");
    d.explicit_minimal_basis = ExplicitBasisDoc{detail::matrix_from_json(e.at("gram")),
                                                parse_rational(e.at("det").get<std::string>()),
                                                e.at("spans_lattice").get<bool>(),
                                                e.at("all_minimal").get<bool>()};
  }
  if (j.contains("similarity_to_order")) {
    const auto& s = j.at("similarity_to_order");
    d.similarity_to_order = SimilarityDoc{s.at("verdict").get<std::string>(),
                                          s.at("reasons").get<std::vector<std::string>>(),
                                          parse_rational(s.at("det_ratio").get<std::string>()),
                                          s.at("forced_scale").get<std::string>(),
                                          s.at("forced_minimum").get<std::string>()};
  }
  if (j.contains("embedding")) {
    const auto& e = j.at("embedding");
    d.embedding = EmbeddingDoc{e.at("precision_bits").get<unsigned>(),
                               e.at("matrix").get<std::vector<std::vector<double>>>(),
                               e.at("max_gram_deviation").get<double>()};
  }
  return d;
}

}  // namespace quatlat
