// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "reference_grams.hpp"
#include "quatlat/group/norm_one.hpp"
#include "quatlat/group/table1.hpp"
#include "quatlat/io/analysis.hpp"
#include "support.hpp"

using namespace qt;

namespace {

using Kind = GroupClass::Kind;

// Collects failed checks for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::ostringstream info;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

const std::vector<std::string>& order_fixtures() {
  static const std::vector<std::string> n = {"lipschitz", "hurwitz", "b2_lambda3", "zeta14",
                                             "sqrt3_order", "sqrt2_2O", "sqrt5_2I"};
  return n;
}

std::vector<GroupClass> table_classes(std::size_t n) {
  std::vector<GroupClass> out;
  for (const auto& r : table1_rows(n)) out.push_back(r.cls);
  return out;
}

bool contains(const std::vector<GroupClass>& v, const GroupClass& c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

void criterion1(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto spec = fixture("hurwitz");
  const auto L = build_lattice(spec.order, spec.alpha);
  const auto S = minimal_vectors(L);
  const auto wr = well_rounded_from(S, L.dimension());
  const Rational det = det_exact(L.gram());
  const auto G = enumerate_norm_one(spec.order);
  const auto cls = classify(G);
  const double dt = seconds_since(t0);
  c.require(spec.alpha == spec.field.one(), "alpha = 1");
  c.require(S.min_norm == 2, "minimum " + to_string(S.min_norm) + " != 2");
  c.require(S.vectors.size() == 24, std::to_string(S.vectors.size()) + " minimal vectors");
  c.require(det == 4, "det " + to_string(det));
  c.require(wr.well_rounded, "not well rounded");
  c.require(cls.kind == Kind::BinaryTetrahedral, "class " + cls.to_string());
  c.require(dt < 1.0, "runtime " + fmt_seconds(dt));
  c.info << "min " << to_string(S.min_norm) << ", " << S.vectors.size() << " vectors, det "
         << to_string(det) << ", " << cls.name() << ", " << fmt_seconds(dt);
}

void criterion2(Check& c) {
  struct Row {
    const char* name;
    RatMatrix gram;
    std::size_t order;
  };
  const std::vector<Row> rows = {{"lipschitz", Rational(2) * to_rational(IntMatrix::identity(4)), 8},
                                 {"hurwitz", d4(), 24},
                                 {"b2_lambda3", a2_a2(), 12}};
  const auto classes = table_classes(1);
  for (const auto& r : rows) {
    const auto spec = fixture(r.name);
    const auto L = build_lattice(spec.order, Rational(1));
    c.require(L.gram() == r.gram, std::string(r.name) + " Gram");
    c.require(is_well_rounded(L).well_rounded, std::string(r.name) + " not well rounded");
    const auto G = enumerate_norm_one(spec.order);
    const auto cls = classify(G);
    c.require(G.order() == r.order, std::string(r.name) + " |group| = " + std::to_string(G.order()));
    c.require(contains(classes, cls), std::string(r.name) + " class " + cls.to_string() + " not in table");
    c.info << r.name << " " << cls.to_string() << "; ";
  }
}

void criterion3(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto spec = fixture("zeta14");
  const auto& A = spec.algebra;
  const auto& K = spec.field;
  const auto L = build_lattice(spec.order, spec.alpha);
  c.require(L.gram() == zeta14_G(), "Gram differs from reference G");
  const Rational det = det_exact(L.gram());
  c.require(det == 282475249, "det " + to_string(det));
  const auto G = enumerate_norm_one(spec.order);
  const auto cls = classify(G);
  c.require(G.order() == 28 && cls == GroupClass{Kind::BinaryDihedral, 7}, "class " + cls.to_string());
  const auto th = K.theta();
  const auto beta = th * th - Rational(3) * th - K.from_rational(3);
  const auto x = -A.j();
  const auto y = A.scalar(Rational(1, 2) * (th * th - th - K.one())) +
                 A.element(K.zero(), Rational(1, 14) * beta, K.zero(), K.zero());
  PresentationGenerators p{cls, G.find(x), G.find(y), std::nullopt};
  c.require(p.x && p.y && verify_presentation(G, p), "reference generators fail the relations");
  if (p.x && p.y) {
    const auto B = explicit_minimal_basis(G, p, A.one());
    const auto Gp = trace_form_gram(K.one(), B);
    c.require(Gp == zeta14_G_prime(), "G' differs from reference");
    c.require(det_exact(Gp) == 282475249, "det G' " + to_string(det_exact(Gp)));
    c.require(module_from_zbasis(A, B).lattice() == spec.order.lattice(), "span of B is not the order");
  }
  const auto S = minimal_vectors(L);
  c.require(S.min_norm == 6, "minimum " + to_string(S.min_norm));
  c.require(S.vectors.size() >= 28, std::to_string(S.vectors.size()) + " minimal vectors");
  const double dt = seconds_since(t0);
  c.require(dt < 30.0, "runtime " + fmt_seconds(dt));
  c.info << "det " << to_string(det) << ", " << cls.to_string() << ", min " << to_string(S.min_norm) << " x"
         << S.vectors.size() << ", " << fmt_seconds(dt);
}

void criterion4(Check& c) {
  const auto so = fixture("sqrt3_order");
  const auto si = fixture("sqrt3_ideal");
  const Rational half(1, 2);
  c.require(so.alpha == so.field.from_rational(half) && si.alpha == si.field.from_rational(half), "alpha = 1/2");
  const auto LO = build_lattice(so.order, half);
  const auto LI = build_lattice(*si.ideal, half);
  c.require(LO.gram() == sqrt3_G_order(), "G_Lambda differs from reference");
  c.require(LI.gram() == sqrt3_G_ideal(), "G_I differs from reference");
  c.require(det_exact(LO.gram()) == 81, "det G_Lambda " + to_string(det_exact(LO.gram())));
  c.require(det_exact(LI.gram()) == 1296, "det G_I " + to_string(det_exact(LI.gram())));
  c.require(minimum(LO) == 2, "minimum " + to_string(minimum(LO)));
  c.require(is_well_rounded(LO).well_rounded, "order lattice not well rounded");
  c.require(is_well_rounded(LI).well_rounded, "ideal lattice not well rounded");
  const auto cls = classify(enumerate_norm_one(so.order));
  c.require(cls == GroupClass{Kind::BinaryDihedral, 6}, "class " + cls.to_string());
  const auto cert = similarity_certificate(LO, LI);
  c.require(cert.disproven(), "similarity not disproven");
  c.require(cert.forced_scale == "√2", "forced scale " + cert.forced_scale);
  c.require(!cert.reasons.empty() && cert.reasons.front() == "forced minimum 2√2 non-integral",
            "missing integrality reason");
  c.info << cls.to_string() << ", disproven (" << (cert.reasons.empty() ? "" : cert.reasons.front()) << ")";
}

void criterion5(Check& c) {
  std::size_t ideals = 0;
  for (const auto& name : fixture_names()) {
    const auto spec = fixture(name);
    const auto& M = spec.target();
    const auto base = min_lower_bound(build_lattice(M, spec.alpha));
    c.require(base.holds, name + " bound fails");
    if (!spec.ideal && spec.alpha.as_rational()) c.require(base.tight, name + " not tight on the order");
    for (int t = 0; t < 100; ++t) {
      // Half principal x M, half x M + p M.
      const auto x = random_invertible_module_elem(M, 2);
      QuatModule I = left_multiply(x, M);
      if (t % 2) {
        const auto& O = spec.order;
        I = right_ideal_from_generators(O, {x, O.algebra().scalar(spec.field.from_rational(uniform(2, 7)))});
        if (spec.ideal) I = module_product(*spec.ideal, I);
      }
      const auto r = min_lower_bound(build_lattice(I, spec.alpha));
      c.require(r.holds, name + ": " + to_string(r.lhs) + " < " + to_string(r.rhs));
      ++ideals;
    }
  }
  c.info << fixture_names().size() << " fixtures, " << ideals << " random ideals";
}

void criterion6(Check& c) {
  double worst = 0;
  for (const auto& name : fixture_names()) {
    const auto spec = fixture(name);
    const auto L = build_lattice(spec.target(), spec.alpha);
    const double dev = max_gram_deviation(generator_matrix_real(L, 64), L.gram());
    c.require(dev < 1e-9, name + " deviation " + std::to_string(dev));
    worst = std::max(worst, dev);
  }
  c.info << "max deviation " << worst;
}

void criterion7(Check& c) {
  for (const auto& name : order_fixtures()) {
    const auto spec = fixture(name);
    const auto r = wellrounded_consistency(spec.order, Rational(1));
    c.require(r.consistent(), name + " disagreement");
  }
  const auto si = fixture("sqrt3_ideal");
  c.require(is_well_rounded(build_lattice(*si.ideal, si.alpha)).well_rounded, "sqrt3 ideal not well rounded");
  for (int t = 0; t < 20; ++t) {
    const auto& name = order_fixtures()[t % order_fixtures().size()];
    const auto spec = fixture(name);
    QuatElem u = random_quat(spec.algebra, 3, 2);
    if (u.is_zero()) u = spec.algebra.one() + spec.algebra.i();
    const auto C = conjugate_module(spec.order, u);
    const auto G0 = build_lattice(spec.order, spec.alpha).gram();
    c.require(conjugate_lattice_gram(spec.order, u, spec.alpha) == G0, name + " conjugate Gram differs");
    c.require(build_lattice(C, spec.alpha).gram() == G0, name + " conjugate order Gram differs");
    const auto r = wellrounded_consistency(C, Rational(1));
    c.require(r.consistent(), name + " conjugate disagreement");
  }
  c.info << order_fixtures().size() << " fixture orders, 20 conjugated orders";
}

void criterion8(Check& c) {
  const auto classes = table_classes(2);
  struct Row {
    const char* name;
    std::size_t order;
    Kind kind;
  };
  for (const Row& r : {Row{"sqrt2_2O", 48, Kind::BinaryOctahedral}, Row{"sqrt5_2I", 120, Kind::BinaryIcosahedral}}) {
    const auto spec = fixture(r.name);
    c.require(is_order(spec.order), std::string(r.name) + " not an order");
    const auto G = enumerate_norm_one(spec.order);
    const auto cls = classify(G);
    c.require(G.order() == r.order, std::string(r.name) + " |group| = " + std::to_string(G.order()));
    c.require(cls.kind == r.kind, std::string(r.name) + " class " + cls.to_string());
    c.require(contains(classes, cls), std::string(r.name) + " class not in table");
    c.require(predict_well_rounded(spec.field.degree(), cls), std::string(r.name) + " predicted false");
    c.require(is_well_rounded(build_lattice(spec.order, spec.alpha)).well_rounded,
              std::string(r.name) + " not well rounded");
    c.info << r.name << " " << cls.name() << " " << G.order() << "; ";
  }
}

void criterion9(Check& c) {
  std::size_t grams = 0;
  while (grams < 500) {
    const std::size_t n = uniform(1, 4);
    const RatMatrix g = random_pd_gram(n, 3);
    const Rational bound(uniform(1, 20));
    if (safe_box(g, bound) > 6) continue;
    ++grams;
    auto got = enumerate_up_to(g, bound);
    const auto want = box_enumerate(g, bound, safe_box(g, bound));
    std::sort(got.begin(), got.end());
    c.require(got == want, "enumeration mismatch in dim " + std::to_string(n));
  }
  for (int t = 0; t < 200; ++t) {
    const IntMatrix m = random_int_matrix(uniform(1, 6), uniform(1, 6), 9);
    const auto h = hnf(m, false).basis;
    c.require(hnf(h, false).basis == h, "HNF not idempotent");
  }
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = uniform(1, 5);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = small_rational(9, 4);
    c.require(det_exact(m) == cofactor_det(m), "det mismatch in dim " + std::to_string(n));
  }
  c.info << grams << " Grams, 200 HNF, 300 determinants";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"Hurwitz reproduction", criterion1},
      {"classification over Q", criterion2},
      {"zeta_14 reproduction", criterion3},
      {"sqrt 3 reproduction", criterion4},
      {"lower bound property suite", criterion5},
      {"embedding isometry", criterion6},
      {"three-way well-roundedness consistency", criterion7},
      {"exceptional fixtures", criterion8},
      {"kernel oracle equivalence", criterion9},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("%s criterion %zu: %s", ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str());
    if (ok) {
      std::printf(" (%s)\n", c.info.str().c_str());
    } else {
      std::printf(" --");
      for (std::size_t i = 0; i < c.failures.size() && i < 5; ++i) std::printf(" %s;", c.failures[i].c_str());
      std::printf("\n");
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
