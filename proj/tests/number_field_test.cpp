#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "quatlat/field/cyclotomic.hpp"
#include "quatlat/field/number_field.hpp"
#include "support.hpp"

using namespace qt;

namespace {

std::vector<Rational> q(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return v;
}

NumberField rationals() { return NumberField::from_poly(q({0, 1})); }
NumberField sqrt_field(long d) { return NumberField::from_poly(q({-d, 0, 1})); }
NumberField golden() { return NumberField::from_poly(q({-1, -1, 1})); }
NumberField zeta14_field() { return NumberField::from_poly(q({1, -2, -1, 1})); }

std::vector<NumberField> fixture_fields() {
  return {rationals(), sqrt_field(2), sqrt_field(3), golden(), zeta14_field()};
}

FieldElem random_elem(const NumberField& K, long bound = 6, long den = 4) {
  std::vector<Rational> c;
  for (std::size_t k = 0; k < K.degree(); ++k) c.push_back(make_rational(uniform(-bound, bound), uniform(1, den)));
  return K.from_coeffs(c);
}

RatInterval sum(const std::vector<RatInterval>& v) {
  RatInterval acc = RatInterval::point(0);
  for (const auto& x : v) acc = acc + x;
  return acc;
}

RatInterval product(const std::vector<RatInterval>& v) {
  RatInterval acc = RatInterval::point(1);
  for (const auto& x : v) acc = acc * x;
  return acc;
}

}  // namespace

TEST(NumberField, Construction) {
  EXPECT_EQ(rationals().degree(), 1u);
  auto K = sqrt_field(3);
  EXPECT_EQ(K.degree(), 2u);
  auto r = K.roots(Rational(1, 1000));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_TRUE(r[0].as_interval().contains(Rational(-1732, 1000)) ||
              r[0].as_interval().contains(Rational(-17325, 10000)));
  EXPECT_LT(r[0].hi, Rational(-17, 10));
  EXPECT_GT(r[1].lo, Rational(17, 10));
  auto Z = zeta14_field();
  EXPECT_EQ(Z.degree(), 3u);
  EXPECT_TRUE(Z.irreducibility().irreducible);
}

TEST(NumberField, RejectsBadPolynomials) {
  EXPECT_THROW(NumberField::from_poly(q({1, 0, 1})), PreconditionError);      // X^2 + 1
  EXPECT_THROW(NumberField::from_poly(q({-2, 0, 2})), PreconditionError);     // not monic
  EXPECT_THROW(NumberField::from_poly(q({3})), PreconditionError);            // degree 0
  EXPECT_THROW(NumberField::from_poly(q({2, -3, 1})), PreconditionError);     // (X-1)(X-2)
  EXPECT_THROW(NumberField::from_poly(q({4, 0, -5, 0, 1})), PreconditionError);  // (X^2-1)(X^2-4)
  // (X^2 - 2X - 1)(X^2 + 2X - 1), four real roots, no rational root.
  EXPECT_THROW(NumberField::from_poly(q({1, 0, -6, 0, 1})), PreconditionError);
}

TEST(NumberField, Irreducible) {
  // X^4 - 10X^2 + 1, minimal polynomial of sqrt2 + sqrt3, reducible mod every prime.
  auto K = NumberField::from_poly(q({1, 0, -10, 0, 1}));
  EXPECT_EQ(K.degree(), 4u);
  EXPECT_TRUE(K.irreducibility().irreducible);
  EXPECT_TRUE(K.irreducibility().used_fallback);
  // 2cos(pi/12).
  EXPECT_EQ(NumberField::from_poly(q({1, 0, -4, 0, 1})).degree(), 4u);
}

TEST(FieldElem, Arithmetic) {
  auto K = sqrt_field(3);
  const auto s = K.theta(), one = K.one();
  EXPECT_EQ(s * one, s);
  EXPECT_EQ((s - one) * (s + one), K.from_rational(2));
  auto Z = zeta14_field();
  const auto t = Z.theta();
  EXPECT_EQ(t * t * t, t * t + Rational(2) * t - Z.one());
  EXPECT_THROW(K.zero().inverse(), PreconditionError);
}

TEST(FieldElem, InverseAndRingLaws) {
  for (const auto& K : fixture_fields()) {
    for (int t = 0; t < 50; ++t) {
      const auto x = random_elem(K), y = random_elem(K), z = random_elem(K);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x * y, y * x);
      if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), K.one());
    }
  }
}

TEST(FieldElem, TraceNorm) {
  for (const auto& K : fixture_fields()) EXPECT_EQ(trace_Q(K.one()), Rational(K.degree()));
  auto K = sqrt_field(3);
  EXPECT_EQ(norm_Q(K.theta() - K.one()), -2);
  EXPECT_EQ(trace_Q(zeta14_field().theta()), 1);
  EXPECT_EQ(norm_Q(zeta14_field().theta()), -1);
}

TEST(FieldElem, TraceNormProperties) {
  for (const auto& K : fixture_fields()) {
    for (int t = 0; t < 50; ++t) {
      const auto x = random_elem(K), y = random_elem(K);
      const Rational c = make_rational(uniform(-9, 9), uniform(1, 5));
      EXPECT_EQ(norm_Q(x * y), norm_Q(x) * norm_Q(y));
      EXPECT_EQ(trace_Q(x + c * y), trace_Q(x) + c * trace_Q(y));
      // Against validated embeddings.
      const auto e = embed_real(x, 80);
      EXPECT_TRUE(sum(e).contains(trace_Q(x)));
      EXPECT_TRUE(product(e).contains(norm_Q(x)));
    }
  }
}

TEST(FieldElem, Signs) {
  for (const auto& K : fixture_fields()) {
    EXPECT_TRUE(is_totally_positive(K.from_rational(Rational(1, 2))));
  }
  auto K = sqrt_field(3);
  EXPECT_EQ(signs_at_embeddings(K.theta() - K.one()), (std::vector<int>{-1, 1}));
  EXPECT_FALSE(is_totally_positive(K.theta() - K.one()));
  auto Z = zeta14_field();
  EXPECT_TRUE(is_totally_positive(Z.theta() * Z.theta()));
  EXPECT_THROW(signs_at_embeddings(Z.zero()), PreconditionError);
}

TEST(FieldElem, SquaresAreTotallyPositive) {
  for (const auto& K : fixture_fields())
    for (int t = 0; t < 100; ++t) {
      const auto x = random_elem(K, 20, 7);
      if (x.is_zero()) continue;
      EXPECT_TRUE(is_totally_positive(x * x));
    }
}

TEST(FieldElem, SignsAgreeWithEmbeddingMidpoints) {
  for (const auto& K : fixture_fields())
    for (int t = 0; t < 1000; ++t) {
      const auto x = random_elem(K, 12, 5);
      if (x.is_zero()) continue;
      const auto s = signs_at_embeddings(x);
      const auto e = embed_real(x, 128);
      ASSERT_EQ(s.size(), e.size());
      for (std::size_t m = 0; m < s.size(); ++m) EXPECT_EQ(s[m], sgn(e[m].midpoint()));
    }
}

TEST(FieldElem, Embeddings) {
  for (const auto& iv : embed_real(zeta14_field().from_rational(2), 64)) EXPECT_TRUE(iv.contains(2));
  auto e = embed_real(sqrt_field(3).theta(), 64);
  EXPECT_NEAR(to_double(e[0].midpoint()), -std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(to_double(e[1].midpoint()), std::sqrt(3.0), 1e-15);
  Rational width(1);
  mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), 64);
  for (const auto& iv : e) EXPECT_LT(iv.width(), width);
  // Ascending: 2cos(5pi/7) < 2cos(3pi/7) < 2cos(pi/7).
  auto z = embed_real(zeta14_field().theta(), 64);
  const double pi = std::numbers::pi;
  EXPECT_NEAR(to_double(z[0].midpoint()), 2 * std::cos(5 * pi / 7), 1e-15);
  EXPECT_NEAR(to_double(z[1].midpoint()), 2 * std::cos(3 * pi / 7), 1e-15);
  EXPECT_NEAR(to_double(z[2].midpoint()), 2 * std::cos(pi / 7), 1e-15);
}

TEST(Cyclotomic, EulerPhi) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(6), 2);
  EXPECT_EQ(euler_phi(8), 4);
  EXPECT_EQ(euler_phi(10), 4);
  for (long m = 1; m <= 200; ++m) {
    long count = 0;
    for (long k = 1; k <= m; ++k) count += std::gcd(k, m) == 1;
    EXPECT_EQ(euler_phi(m), count) << m;
  }
}

TEST(Cyclotomic, RealSubfields) {
  EXPECT_EQ(real_cyclotomic_field(4).degree(), 1u);
  EXPECT_EQ(real_cyclotomic_field(14).min_poly(), zeta14_field().min_poly());
  EXPECT_EQ(real_cyclotomic_field(8).min_poly(), sqrt_field(2).min_poly());
  EXPECT_THROW(real_cyclotomic_field(2), PreconditionError);
}

TEST(Cyclotomic, DegreeAndLargestRoot) {
  for (long N = 3; N <= 60; ++N) {
    const auto K = real_cyclotomic_field(N);
    EXPECT_EQ(static_cast<long>(K.degree()), euler_phi(N) / 2) << N;
    // 2cos(2pi/N) is the largest root.
    const auto r = K.roots(Rational(1, 1 << 20));
    EXPECT_NEAR(to_double(r.back().lo), 2 * std::cos(2 * std::numbers::pi / N), 1e-5) << N;
  }
}
