#pragma once

#include "novikov/exact/algebraic.hpp"
#include "novikov/exact/matrix.hpp"

#include <memory>
#include <vector>

namespace novikov {

/// Element of Q(λ) stored as the residue of a rational polynomial modulo the
/// monic minimal polynomial of λ. A default-constructed element is the
/// fieldless zero, which adopts the field of the other operand.
class NFElem {
 public:
  NFElem() = default;
  NFElem(long v) : value_(RatPoly::constant(Rat(v))) {}
  NFElem(const Rat& v) : value_(RatPoly::constant(v)) {}
  NFElem(std::shared_ptr<const RatPoly> modulus, const RatPoly& value);

  /// Coefficient list of length deg(minpoly) (zero-padded).
  std::vector<Rat> rep() const;
  const RatPoly& value() const { return value_; }
  const std::shared_ptr<const RatPoly>& modulus() const { return mod_; }

  NFElem inverse() const;

  friend NFElem operator+(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a, const NFElem& b);
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }
  NFElem operator-() const { return NFElem(mod_, -value_); }
  NFElem& operator+=(const NFElem& b) { return *this = *this + b; }
  NFElem& operator-=(const NFElem& b) { return *this = *this - b; }
  friend bool operator==(const NFElem& a, const NFElem& b) { return (a - b).value_.is_zero(); }

 private:
  std::shared_ptr<const RatPoly> mod_;
  RatPoly value_;
};

inline bool is_zero(const NFElem& v) { return v.value().is_zero(); }

/// The field Q(λ) generated by one real algebraic number.
class NumberField {
 public:
  explicit NumberField(AlgebraicReal generator);
  const AlgebraicReal& generator() const { return gen_; }
  int degree() const { return gen_.degree(); }
  NFElem gen() const;
  NFElem from_rat(const Rat& v) const;
  NFElem from_poly(const RatPoly& p) const;
  /// Embed a rational matrix.
  Matrix<NFElem> embed(const Matrix<Rat>& m) const;
  /// Floating-point value of an element at the generator.
  double approx(const NFElem& e) const;

 private:
  AlgebraicReal gen_;
  std::shared_ptr<const RatPoly> mod_;
};

/// Rank over Q(λ) by Gaussian elimination; depends only on the minimal
/// polynomial, not on which root λ is.
int nf_rank(const Matrix<NFElem>& m);

}  // namespace novikov
