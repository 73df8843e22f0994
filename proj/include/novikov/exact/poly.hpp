#pragma once

#include "novikov/exact/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace novikov {

/// Dense univariate polynomial, coefficients lowest degree first. The
/// coefficient vector is kept trimmed so the zero polynomial is empty and the
/// leading coefficient of any other polynomial is nonzero.
template <class T>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
  static UPoly constant(const T& value) { return UPoly(std::vector<T>{value}); }
  static UPoly monomial(const T& coefficient, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = coefficient;
    return UPoly(std::move(c));
  }
  static UPoly x() { return monomial(T(1), 1); }

  bool is_zero() const { return c_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const T& lc() const { return c_.back(); }
  const std::vector<T>& coefficients() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  template <class S>
  S eval(const S& at) const {
    S acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + S(c_[i]);
    return acc;
  }

  UPoly derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
    return UPoly(std::move(d));
  }

  UPoly operator-() const {
    std::vector<T> c = c_;
    for (auto& v : c) v = -v;
    return UPoly(std::move(c));
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const T& s, const UPoly& p) {
    std::vector<T> c = p.c_;
    for (auto& v : c) v *= s;
    return UPoly(std::move(c));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = UPoly<Int>;
using RatPoly = UPoly<Rat>;

RatPoly to_rat_poly(const IntPoly& p);

/// Clears denominators and removes the content; the result has positive
/// leading coefficient. Zero maps to zero.
IntPoly primitive_part(const RatPoly& p);
IntPoly primitive_part(const IntPoly& p);
Int content(const IntPoly& p);

/// Euclidean division over Q. Throws std::domain_error on a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);

/// Monic gcd over Q (zero when both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  RatPoly g, s, t;
};
ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b);

RatPoly monic(const RatPoly& p);

/// Sign of p at a rational point.
int sign_at(const IntPoly& p, const Rat& at);

/// p(-x) and x^deg p(1/x).
IntPoly negate_variable(const IntPoly& p);
IntPoly reverse(const IntPoly& p);

/// Square-free decomposition over Q (Yun). Returns primitive factors a_i with
/// multiplicity i such that p = c * prod a_i^i.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

/// Sturm sequence of a square-free polynomial and the number of distinct
/// roots in the half-open interval (lo, hi].
std::vector<RatPoly> sturm_sequence(const IntPoly& p);
int sign_variations(const std::vector<RatPoly>& sturm, const Rat& at);
int sturm_count(const std::vector<RatPoly>& sturm, const Rat& lo, const Rat& hi);

/// Cauchy bound: every complex root has modulus strictly below the result.
Rat root_bound(const IntPoly& p);

/// Polynomial in x with lowest-degree-first coefficients, e.g. "x^3 - x - 1".
std::string to_string(const IntPoly& p, const std::string& var = "x");

}  // namespace novikov
