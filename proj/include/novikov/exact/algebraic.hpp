#pragma once

#include "novikov/exact/poly.hpp"

#include <string>
#include <vector>

namespace novikov {

/// A real algebraic number: irreducible primitive integer minimal polynomial
/// and an open rational interval (lo, hi) containing exactly one of its real
/// roots. Endpoints are never roots. Values are immutable; refinement returns
/// a new object.
class AlgebraicReal {
 public:
  /// Checked constructor: throws std::invalid_argument unless minpoly is
  /// irreducible and (lo, hi) isolates exactly one root.
  AlgebraicReal(const IntPoly& minpoly, const Rat& lo, const Rat& hi);

  static AlgebraicReal from_rational(const Rat& value);
  /// Skips validation; callers guarantee the invariants.
  static AlgebraicReal trusted(IntPoly minpoly, Rat lo, Rat hi);

  const IntPoly& minpoly() const { return minpoly_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  int degree() const { return minpoly_.degree(); }
  bool is_rational() const { return minpoly_.degree() == 1; }
  /// Throws std::logic_error when the number is irrational.
  Rat rational_value() const;

  /// Bisects until hi - lo <= width.
  AlgebraicReal refined(const Rat& width) const;
  /// Halves the interval once.
  AlgebraicReal bisected() const;

  int sign() const;
  double approx() const;

 private:
  AlgebraicReal() = default;
  IntPoly minpoly_;
  Rat lo_, hi_;
};

struct RealRoot {
  AlgebraicReal value;
  int multiplicity;
};

/// All real roots of p, sorted increasingly, with pairwise disjoint
/// intervals. Throws std::invalid_argument on the zero polynomial.
std::vector<RealRoot> isolate_real_roots(const IntPoly& p);

/// Number of distinct real roots of p (any nonzero polynomial).
int count_real_roots(const IntPoly& p);

bool alg_eq(const AlgebraicReal& a, const AlgebraicReal& b);
/// -1, 0, 1 as a < b, a == b, a > b. Exact.
int compare(const AlgebraicReal& a, const AlgebraicReal& b);
inline bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return alg_eq(a, b); }
inline bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; }

/// 1/a. Throws std::domain_error for zero.
AlgebraicReal alg_reciprocal(const AlgebraicReal& a);
AlgebraicReal alg_neg(const AlgebraicReal& a);
/// a^k for k >= 1 (k <= -1 goes through the reciprocal).
AlgebraicReal alg_pow(const AlgebraicReal& a, int k);

/// "2", "-1/3" or "root of x^3 - x - 1 in (1, 2)".
std::string to_string(const AlgebraicReal& a);

}  // namespace novikov
