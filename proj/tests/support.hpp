#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "quatlat/core/linalg.hpp"
#include "quatlat/core/matrix.hpp"
#include "quatlat/io/problem_spec.hpp"

#ifndef QUATLAT_FIXTURE_DIR
#define QUATLAT_FIXTURE_DIR "fixtures"
#endif

namespace qt {

using namespace quatlat;

inline std::string fixture_path(const std::string& name) {
  return std::string(QUATLAT_FIXTURE_DIR) + "/" + name + ".spec";
}

inline ProblemSpec fixture(const std::string& name) { return load_problem_spec(fixture_path(name)); }

inline nlohmann::json fixture_json(const std::string& name) {
  return nlohmann::json::parse(read_text_file(fixture_path(name)));
}

// Quaternion list stored under path, e.g. {"order", "ok_generators"}.
inline std::vector<QuatElem> fixture_quats(const std::string& name, const QuatAlgebra& A,
                                           std::initializer_list<const char*> path) {
  nlohmann::json j = fixture_json(name);
  for (const char* key : path) j = j.at(key);
  return quatlat::detail::parse_quat_list(A, j, name);
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"lipschitz",  "hurwitz",     "b2_lambda3",
                                                 "zeta14",     "sqrt3_order", "sqrt3_ideal",
                                                 "sqrt2_2O",   "sqrt5_2I"};
  return names;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Rational small_rational(long bound = 5, long den = 3) {
  return make_rational(uniform(-bound, bound), uniform(1, den));
}

inline FieldElem random_field_elem(const NumberField& K, long bound = 5, long den = 3) {
  std::vector<Rational> c;
  for (std::size_t k = 0; k < K.degree(); ++k) c.push_back(small_rational(bound, den));
  return K.from_coeffs(c);
}

inline QuatElem random_quat(const QuatAlgebra& A, long bound = 5, long den = 3) {
  const auto& K = A.field();
  return A.element(random_field_elem(K, bound, den), random_field_elem(K, bound, den),
                   random_field_elem(K, bound, den), random_field_elem(K, bound, den));
}

// Random element of a module with coordinates in [-bound, bound].
inline QuatElem random_module_elem(const QuatModule& M, long bound = 2) {
  std::vector<Integer> v(M.dimension());
  for (auto& x : v) x = uniform(-bound, bound);
  return M.element(v);
}

inline QuatElem random_invertible_module_elem(const QuatModule& M, long bound = 2) {
  for (;;) {
    QuatElem x = random_module_elem(M, bound);
    if (!reduced_norm(x).is_zero()) return x;
  }
}

inline RatMatrix rat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (auto row : rows) {
    std::vector<Rational> v;
    for (long x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return RatMatrix::from_rows(r);
}

inline IntMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> r;
  for (auto row : rows) {
    std::vector<Integer> v;
    for (long x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return IntMatrix::from_rows(r);
}

inline IntMatrix random_int_matrix(std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(-bound, bound);
  return m;
}

// Product of random elementary row operations.
inline IntMatrix random_unimodular(std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = uniform(0, n - 1);
    std::size_t b = uniform(0, n - 2);
    if (b >= a) ++b;
    switch (uniform(0, 2)) {
      case 0: u.sub_row_multiple(a, b, Integer(uniform(-2, 2))); break;
      case 1: u.swap_rows(a, b); break;
      default: u.negate_row(a);
    }
  }
  return u;
}

// B B^T for a random nonsingular integer B.
inline RatMatrix random_pd_gram(std::size_t n, long entry_bound) {
  for (;;) {
    IntMatrix b = random_int_matrix(n, n, entry_bound);
    if (det_exact(b) == 0) continue;
    return to_rational(b * b.transpose());
  }
}

// Laplace expansion along the first row.
inline Rational cofactor_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    const Rational t = m(0, c) * cofactor_det(minor);
    acc += (c % 2 ? -t : t);
  }
  return acc;
}

// All nonzero v with |v_i| <= box and v G v^T <= bound, lexicographic order.
// Works on the Gram scaled to machine integers.
inline std::vector<std::vector<Integer>> box_enumerate(const RatMatrix& g, const Rational& bound,
                                                       long box) {
  const std::size_t n = g.rows();
  std::vector<std::vector<Integer>> out;
  if (n == 0) return out;
  Integer d = 1;
  for (const auto& x : g.data()) d = lcm(d, x.get_den());
  d = lcm(d, bound.get_den());
  std::vector<long> gi(n * n);
  for (std::size_t i = 0; i < n * n; ++i) gi[i] = Rational(g.data()[i] * d).get_num().get_si();
  const long b = Rational(bound * d).get_num().get_si();
  std::vector<long> v(n, -box);
  for (;;) {
    long q = 0;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      nonzero |= v[i] != 0;
      long row = 0;
      for (std::size_t j = 0; j < n; ++j) row += gi[i * n + j] * v[j];
      q += v[i] * row;
    }
    if (nonzero && q <= b) out.emplace_back(v.begin(), v.end());
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (v[i] < box) {
        ++v[i];
        for (std::size_t j = i + 1; j < n; ++j) v[j] = -box;
        break;
      }
      if (i == 0) return out;
    }
  }
}

// Box that contains every v with v G v^T <= bound: |v_i| <= sqrt(bound * (G^-1)_ii).
inline long safe_box(const RatMatrix& g, const Rational& bound) {
  const RatMatrix inv = *inverse(g);
  long box = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const double r = std::sqrt(to_double(bound * inv(i, i)));
    box = std::max(box, static_cast<long>(std::floor(r + 1e-9)));
  }
  return box;
}

}  // namespace qt
