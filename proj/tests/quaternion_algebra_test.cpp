#include <gtest/gtest.h>

#include "quatlat/field/cyclotomic.hpp"
#include "quatlat/quat/algebra.hpp"
#include "support.hpp"

using namespace qt;

namespace {

NumberField Q() { return NumberField::from_poly({Rational(0), Rational(1)}); }

QuatAlgebra rational_algebra(long a, long b) {
  auto K = Q();
  return QuatAlgebra(K.from_rational(a), K.from_rational(b));
}

std::vector<QuatAlgebra> fixture_algebras() {
  std::vector<QuatAlgebra> out;
  for (const auto& name : fixture_names()) out.push_back(fixture(name).algebra);
  return out;
}

// Schoolbook product on the 16 basis pairs, written independently of operator*.
QuatElem oracle_mul(const QuatElem& x, const QuatElem& y) {
  const auto& A = x.algebra();
  const FieldElem a = A.a(), b = A.b();
  const auto& K = A.field();
  // e_p e_q = coef * e_r with e = {1, i, j, ij}.
  struct Entry {
    int r;
    FieldElem c;
  };
  const FieldElem one = K.one();
  const Entry table[4][4] = {
      {{0, one}, {1, one}, {2, one}, {3, one}},
      {{1, one}, {0, a}, {3, one}, {2, a}},
      {{2, one}, {3, -one}, {0, b}, {1, -b}},
      {{3, one}, {2, -a}, {1, b}, {0, -(a * b)}},
  };
  std::array<FieldElem, 4> z{K.zero(), K.zero(), K.zero(), K.zero()};
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) z[table[p][q].r] += table[p][q].c * x[p] * y[q];
  return A.element(z[0], z[1], z[2], z[3]);
}

}  // namespace

TEST(QuatAlgebra, Multiplication) {
  auto H = rational_algebra(-1, -1);
  const auto x = H.element(H.field().from_rational(3), H.field().from_rational(-2),
                           H.field().from_rational(Rational(1, 2)), H.field().from_rational(7));
  EXPECT_EQ(x * H.one(), x);
  EXPECT_EQ(H.i() * H.j(), H.ij());
  EXPECT_EQ(H.j() * H.i(), -H.ij());
  auto B = rational_algebra(-1, -3);
  const auto w = Rational(1, 2) * (B.one() + B.j());
  EXPECT_EQ(w * w, Rational(-1, 2) * B.one() + Rational(1, 2) * B.j());
}

TEST(QuatAlgebra, MultiplicationMatchesBasisTable) {
  for (const auto& A : fixture_algebras())
    for (int t = 0; t < 40; ++t) {
      const auto x = random_quat(A), y = random_quat(A);
      EXPECT_EQ(x * y, oracle_mul(x, y));
    }
}

TEST(QuatAlgebra, Conjugation) {
  auto H = rational_algebra(-1, -1);
  EXPECT_EQ(conj(H.one()), H.one());
  EXPECT_EQ(conj(H.i() + H.j()), -H.i() - H.j());
  for (int t = 0; t < 20; ++t) {
    const auto x = random_quat(H);
    EXPECT_EQ(conj(conj(x)), x);
  }
}

TEST(QuatAlgebra, TraceAndNorm) {
  auto H = rational_algebra(-1, -1);
  EXPECT_EQ(reduced_norm(H.one()), H.field().one());
  EXPECT_EQ(reduced_trace(H.one()), H.field().from_rational(2));
  const auto h = Rational(1, 2) * (H.one() + H.i() + H.j() + H.ij());
  EXPECT_EQ(reduced_norm(h), H.field().one());

  auto K = real_cyclotomic_field(14);
  QuatAlgebra A(K.from_rational(-7), K.from_rational(-1));
  const auto th = K.theta();
  const auto beta = th * th - Rational(3) * th - K.from_rational(3);
  const auto y = A.scalar(Rational(1, 2) * (th * th - th - K.one())) +
                 A.element(K.zero(), Rational(1, 14) * beta, K.zero(), K.zero());
  EXPECT_EQ(reduced_norm(y), K.one());
}

TEST(QuatAlgebra, NormAndTraceProperties) {
  for (const auto& A : fixture_algebras())
    for (int t = 0; t < 30; ++t) {
      const auto x = random_quat(A), y = random_quat(A), z = random_quat(A);
      EXPECT_EQ(x * conj(x), A.scalar(reduced_norm(x)));
      EXPECT_EQ(x + conj(x), A.scalar(reduced_trace(x)));
      EXPECT_EQ(reduced_norm(x * y), reduced_norm(x) * reduced_norm(y));
      EXPECT_EQ(conj(x * y), conj(y) * conj(x));
      EXPECT_EQ((x * y) * z, x * (y * z));
      if (!x.is_zero()) EXPECT_EQ(x * inverse(x), A.one());
    }
}

TEST(QuatAlgebra, TotalDefiniteness) {
  EXPECT_TRUE(is_totally_definite(rational_algebra(-1, -1)));
  EXPECT_FALSE(is_totally_definite(rational_algebra(1, -1)));
  EXPECT_FALSE(is_totally_definite(rational_algebra(-1, 2)));
  for (long two_m : {8L, 10L, 12L, 14L, 18L, 30L}) {
    auto K = real_cyclotomic_field(two_m);
    const auto t = K.theta();
    EXPECT_TRUE(is_totally_definite(QuatAlgebra(K.from_rational(-1), t * t - K.from_rational(4))))
        << two_m;
  }
  auto K = real_cyclotomic_field(12);  // Q(sqrt 3)
  EXPECT_FALSE(is_totally_definite(QuatAlgebra(K.from_rational(-1), K.theta() - K.from_rational(1))));
  EXPECT_THROW(QuatAlgebra(K.from_rational(1), K.from_rational(-1), true), PreconditionError);
  EXPECT_THROW(QuatAlgebra(K.zero(), K.from_rational(-1)), PreconditionError);
}

TEST(TraceForm, Examples) {
  for (const auto& A : fixture_algebras()) {
    const auto& K = A.field();
    const Rational n(K.degree());
    EXPECT_EQ(trace_form(K.one(), A.one(), A.one()), 2 * n);
    EXPECT_EQ(trace_form(K.from_rational(Rational(3, 7)), A.one(), A.one()), 2 * n * Rational(3, 7));
  }
  auto H = rational_algebra(-1, -1);
  EXPECT_EQ(trace_form(H.field().one(), H.i(), H.j()), 0);

  const auto spec = fixture("sqrt3_order");
  const auto& g1 = spec.order.basis().front();
  EXPECT_EQ(trace_form(spec.field.from_rational(Rational(1, 2)), g1, g1), 2);
}

TEST(TraceForm, Hypotheses) {
  auto H = rational_algebra(-1, -1);
  EXPECT_THROW(trace_form(H.field().from_rational(-1), H.one(), H.one()), PreconditionError);
  auto I = rational_algebra(1, -1);
  EXPECT_THROW(trace_form(I.field().one(), I.one(), I.one()), PreconditionError);
}

TEST(TraceForm, AdjunctionSymmetryPositivity) {
  for (const auto& name : fixture_names()) {
    const auto spec = fixture(name);
    const auto& A = spec.algebra;
    for (int t = 0; t < 25; ++t) {
      const auto x = random_quat(A), y = random_quat(A), l = random_quat(A);
      const auto& al = spec.alpha;
      EXPECT_EQ(trace_form(al, l * x, y), trace_form(al, x, conj(l) * y));
      EXPECT_EQ(trace_form(al, x, y), trace_form(al, y, x));
      if (!x.is_zero()) EXPECT_GT(trace_form(al, x, x), 0);
      // b_alpha(x, x) = 2 Tr(alpha nrd x).
      EXPECT_EQ(trace_form(al, x, x), 2 * trace_Q(al * reduced_norm(x)));
    }
  }
}

TEST(TraceForm, TotallyPositiveIrrationalAlpha) {
  auto K = real_cyclotomic_field(12);
  QuatAlgebra A(K.from_rational(-1), K.from_rational(-1), true);
  const auto alpha = K.from_rational(2) + K.theta();  // 2 + sqrt 3
  ASSERT_TRUE(is_totally_positive(alpha));
  for (int t = 0; t < 30; ++t) {
    const auto x = random_quat(A);
    if (!x.is_zero()) EXPECT_GT(trace_form(alpha, x, x), 0);
  }
}
