// quatlat: ideal lattices of totally definite quaternion algebras.

#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quatlat/group/table1.hpp"
#include "quatlat/io/analysis.hpp"

namespace {

using nlohmann::json;
using namespace quatlat;

constexpr int kExitConsistency = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBudget = 4;

struct Common {
  std::optional<unsigned long long> budget;
  int indent = 2;
  EnumerationOptions enumeration() const {
    EnumerationOptions o;
    if (budget) o.node_budget = *budget;
    return o;
  }
};

void emit(const json& j, int indent) { std::cout << j.dump(indent < 0 ? -1 : indent) << "\n"; }

int run_analyze(const std::string& path, const AnalyzeOptions& opts, const Common& c) {
  const std::string text = read_text_file(path);
  const ProblemSpec spec = parse_problem_spec_text(text);
  const ResultDocument d = analyze(spec, text, opts);
  emit(to_json(d), c.indent);
  if (!d.consistent) {
    std::cerr << "quatlat: consistency check failed for " << path << "\n";
    return kExitConsistency;
  }
  return 0;
}

int run_table1(const std::vector<std::size_t>& ns, bool build, const Common& c) {
  json rows = json::array();
  bool matches = true;
  for (std::size_t n : ns) {
    auto table = table1_rows(n);
    std::vector<long> orders;
    for (auto& r : table) {
      if (build) build_table1_order(r, c.enumeration());
      json row = {{"n", r.n},
                  {"class", r.cls.name()},
                  {"group_order", r.cls.order()},
                  {"field", r.field},
                  {"algebra", r.algebra},
                  {"predicted_well_rounded", r.predicted}};
      if (r.cls.kind == GroupClass::Kind::BinaryDihedral) {
        row["m"] = r.cls.m;
        row["two_m"] = r.two_m;
      }
      if (r.measured_order) {
        row["measured_order"] = *r.measured_order;
        row["measured_class"] = r.measured_class->name();
        if (static_cast<long>(*r.measured_order) != r.cls.order() || !(*r.measured_class == r.cls))
          matches = false;
      }
      if (!r.predicted) matches = false;
      orders.push_back(r.cls.order());
      rows.push_back(std::move(row));
    }
    const auto expected = table1_expected_orders(n);
    if (!expected.empty() && orders != expected) matches = false;
  }
  emit({{"rows", rows}, {"matches_table", matches}}, c.indent);
  return matches ? 0 : kExitConsistency;
}

int run_compare(const std::string& a, const std::string& b, const std::optional<std::string>& alpha,
                const Common& c) {
  const ProblemSpec sa = load_problem_spec(a), sb = load_problem_spec(b);
  auto lattice = [&](const ProblemSpec& s) {
    const FieldElem al = alpha ? parse_alpha_text(s.field, *alpha) : s.alpha;
    return build_lattice(s.target(), al);
  };
  const IdealLattice la = lattice(sa), lb = lattice(sb);
  if (la.dimension() != lb.dimension())
    throw PreconditionError("compare: dimensions " + std::to_string(la.dimension()) + " and " +
                            std::to_string(lb.dimension()) + " differ");
  const auto cert = similarity_certificate(la, lb, c.enumeration());
  emit({{"a", sa.name},
        {"b", sb.name},
        {"verdict", cert.disproven() ? "disproven" : "inconclusive"},
        {"reasons", cert.reasons},
        {"det_a", to_string(det_exact(la.gram()))},
        {"det_b", to_string(det_exact(lb.gram()))},
        {"det_ratio", to_string(cert.det_ratio)},
        {"forced_scale", cert.forced_scale},
        {"forced_minimum", cert.forced_minimum},
        {"minimum_a", to_string(cert.min1)},
        {"minimum_b", to_string(cert.min2)},
        {"minimal_vectors_a", cert.count1},
        {"minimal_vectors_b", cert.count2}},
       c.indent);
  return 0;
}

// Random right ideals x Lambda + p Lambda; reports the well-rounded ones.
int run_search(const std::string& path, int count, unsigned long seed, int max_coeff,
               const Common& c) {
  const ProblemSpec spec = load_problem_spec(path);
  const QuatModule& order = spec.order;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-max_coeff, max_coeff);
  const long primes[] = {2, 3, 5, 7};
  std::uniform_int_distribution<int> pick(0, 3);
  json found = json::array();
  int tested = 0, well_rounded = 0;
  for (int t = 0; t < count; ++t) {
    std::vector<Integer> v(order.dimension());
    for (auto& x : v) x = coef(rng);
    const QuatElem x = order.element(v);
    if (reduced_norm(x).is_zero()) continue;
    const long p = primes[pick(rng)];
    const QuatModule I = right_ideal_from_generators(
        order, {x, spec.algebra.scalar(spec.field.from_rational(Rational(p)))});
    const IdealLattice L = build_lattice(I, spec.alpha);
    const auto S = minimal_vectors(L, c.enumeration());
    const auto wr = well_rounded_from(S, L.dimension());
    ++tested;
    if (!wr.well_rounded) continue;
    ++well_rounded;
    found.push_back({{"x", x.to_string()},
                     {"p", p},
                     {"det", to_string(det_exact(L.gram()))},
                     {"minimum", to_string(S.min_norm)},
                     {"minimal_vector_count", S.vectors.size()}});
  }
  emit({{"name", spec.name},
        {"tested", tested},
        {"well_rounded", well_rounded},
        {"ideals", found}},
       c.indent);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quatlat: ideal lattices from totally definite quaternion algebras"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", common.budget, "Enumeration node budget (default: $QUATLAT_BUDGET or 1e8)");
    sub->add_option("--json-indent", common.indent, "JSON indent; negative for one line");
  };

  AnalyzeOptions aopts;
  std::string spec_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze the lattice of a problem spec");
  analyze_cmd->add_option("spec", spec_path, "Problem spec (JSON)")->required();
  analyze_cmd->add_flag("--embed", aopts.embed, "Include the floating generator matrix");
  analyze_cmd->add_option("--precision", aopts.precision_bits, "Embedding precision in bits");
  analyze_cmd->add_option("--alpha", aopts.alpha, "Override alpha: p/q or c0,c1,...");
  add_common(analyze_cmd);

  std::vector<std::size_t> ns{1, 2, 3};
  bool build = false;
  auto* table_cmd = app.add_subcommand("table1", "Regenerate the table of well-rounded cases");
  table_cmd->add_option("--n", ns, "Field degrees");
  table_cmd->add_flag("--build", build, "Build each order and measure its norm-one group");
  add_common(table_cmd);

  std::string spec_a, spec_b;
  std::optional<std::string> compare_alpha;
  auto* compare_cmd = app.add_subcommand("compare", "One-sided similarity test of two lattices");
  compare_cmd->add_option("spec_a", spec_a, "First problem spec")->required();
  compare_cmd->add_option("spec_b", spec_b, "Second problem spec")->required();
  compare_cmd->add_option("--alpha", compare_alpha, "Override alpha for both");
  add_common(compare_cmd);

  int count = 50, max_coeff = 2;
  unsigned long seed = 1;
  std::string search_path;
  auto* search_cmd =
      app.add_subcommand("search-ideals", "Search random right ideals for well-rounded lattices");
  search_cmd->add_option("spec", search_path, "Problem spec whose order is searched")->required();
  search_cmd->add_option("--count", count, "Number of random ideals");
  search_cmd->add_option("--seed", seed, "Random seed");
  search_cmd->add_option("--max-coeff", max_coeff, "Coefficient bound for the random generator");
  add_common(search_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    aopts.enumeration = common.enumeration();
    if (*analyze_cmd) return run_analyze(spec_path, aopts, common);
    if (*table_cmd) return run_table1(ns, build, common);
    if (*compare_cmd) return run_compare(spec_a, spec_b, compare_alpha, common);
    if (*search_cmd) return run_search(search_path, count, seed, max_coeff, common);
  } catch (const ParseError& e) {
    std::cerr << "quatlat: parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "quatlat: precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const BudgetExceeded& e) {
    std::cerr << "quatlat: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ConsistencyError& e) {
    std::cerr << "quatlat: consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  }
  return 0;
}
