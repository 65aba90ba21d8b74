#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quatlat/core/error.hpp"
#include "quatlat/core/hnf.hpp"
#include "quatlat/core/linalg.hpp"
#include "quatlat/core/matrix.hpp"

namespace quatlat {

/// A Z-module in Q^d stored as (1/den) * rowspan(basis), with `basis` in row
/// HNF and gcd(den, entries of basis) = 1, so equal modules have equal
/// representations.
class IntLatticeBasis {
 public:
  IntLatticeBasis() = default;

  /// Z-span of the rows (zero rows allowed).
  static IntLatticeBasis from_rows(const RatMatrix& rows) {
    const Integer d = common_denominator(rows);
    IntLatticeBasis out;
    out.basis_ = hnf(to_integer(rows, d)).basis;
    if (out.basis_.rows() == 0) out.basis_ = IntMatrix(0, rows.cols());
    out.den_ = d;
    out.normalize();
    return out;
  }

  std::size_t rank() const { return basis_.rows(); }
  std::size_t ambient_dimension() const { return basis_.cols(); }
  bool is_full_rank() const { return rank() == ambient_dimension(); }
  const IntMatrix& basis() const { return basis_; }
  const Integer& denominator() const { return den_; }

  /// Basis rows as rational coordinates.
  RatMatrix rational_basis() const {
    RatMatrix r(basis_.rows(), basis_.cols());
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = Rational(basis_(i, j)) / Rational(den_);
    return r;
  }

  /// Integer coordinates of v over the basis rows, if v lies in the module.
  /// Requires full rank.
  std::optional<std::vector<Integer>> coordinates(std::span<const Rational> v) const {
    require_full_rank();
    std::vector<Rational> scaled(v.begin(), v.end());
    for (auto& s : scaled) s *= Rational(den_);
    return solve_in_hnf(basis_, scaled);
  }
  bool contains(std::span<const Rational> v) const { return coordinates(v).has_value(); }
  bool contains(const IntLatticeBasis& o) const {
    const RatMatrix r = o.rational_basis();
    for (std::size_t i = 0; i < r.rows(); ++i)
      if (!contains(r.row(i))) return false;
    return true;
  }

  /// Covolume |det B| / den^d of a full-rank module.
  Rational covolume() const {
    require_full_rank();
    Integer prod = 1;
    for (std::size_t i = 0; i < rank(); ++i) prod *= basis_(i, i);
    return Rational(prod) / Rational(pow(den_, static_cast<unsigned long>(rank())));
  }

  /// Dual {y : y . x in Z for all x}, basis (B^-1)^T.
  IntLatticeBasis dual() const {
    require_full_rank();
    auto inv = inverse(rational_basis());
    if (!inv) throw ConsistencyError("full-rank lattice basis is singular");
    return from_rows(inv->transpose());
  }

  friend IntLatticeBasis operator+(const IntLatticeBasis& a, const IntLatticeBasis& b) {
    if (a.ambient_dimension() != b.ambient_dimension())
      throw PreconditionError("lattice sum: dimension mismatch");
    RatMatrix r = a.rational_basis();
    const RatMatrix rb = b.rational_basis();
    for (std::size_t i = 0; i < rb.rows(); ++i) r.append_row(rb.row(i));
    return from_rows(r);
  }

  friend bool operator==(const IntLatticeBasis& a, const IntLatticeBasis& b) {
    return a.den_ == b.den_ && a.basis_ == b.basis_;
  }

 private:
  void normalize() {
    Integer g = den_;
    for (const auto& v : basis_.data()) g = gcd(g, v);
    if (g > 1) {
      den_ /= g;
      for (std::size_t i = 0; i < basis_.rows(); ++i)
        for (std::size_t j = 0; j < basis_.cols(); ++j) basis_(i, j) /= g;
    }
  }
  void require_full_rank() const {
    if (!is_full_rank()) throw PreconditionError("lattice is not of full rank");
  }

  IntMatrix basis_;
  Integer den_ = 1;
};

/// L1 cap L2 = (L1* + L2*)* for full-rank lattices.
inline IntLatticeBasis intersect(const IntLatticeBasis& a, const IntLatticeBasis& b) {
  return (a.dual() + b.dual()).dual();
}

}  // namespace quatlat
