#include "novikov/exact/number_field.hpp"

#include <stdexcept>

namespace novikov {

namespace {

const std::shared_ptr<const RatPoly>& pick(const NFElem& a, const NFElem& b) {
  if (a.modulus() && b.modulus() && a.modulus() != b.modulus() && *a.modulus() != *b.modulus()) {
    throw std::invalid_argument("number field elements from different fields");
  }
  return a.modulus() ? a.modulus() : b.modulus();
}

}  // namespace

NFElem::NFElem(std::shared_ptr<const RatPoly> modulus, const RatPoly& value) : mod_(std::move(modulus)) {
  value_ = (mod_ && value.degree() >= mod_->degree()) ? value % *mod_ : value;
}

std::vector<Rat> NFElem::rep() const {
  std::size_t n = mod_ ? static_cast<std::size_t>(mod_->degree()) : 1;
  std::vector<Rat> r(n, Rat(0));
  for (std::size_t i = 0; i < value_.coefficients().size() && i < n; ++i) r[i] = value_.coefficients()[i];
  return r;
}

NFElem NFElem::inverse() const {
  if (value_.is_zero()) throw std::domain_error("inverse of zero in a number field");
  if (value_.degree() == 0) return NFElem(mod_, RatPoly::constant(Rat(1 / value_.lc())));
  if (!mod_) throw std::logic_error("non-constant element without a field");
  ExtendedGcd e = extended_gcd(value_, *mod_);
  if (e.g.degree() != 0) throw std::domain_error("element not invertible: modulus is reducible");
  return NFElem(mod_, e.s);
}

NFElem operator+(const NFElem& a, const NFElem& b) { return NFElem(pick(a, b), a.value_ + b.value_); }

NFElem operator-(const NFElem& a, const NFElem& b) { return NFElem(pick(a, b), a.value_ - b.value_); }

NFElem operator*(const NFElem& a, const NFElem& b) { return NFElem(pick(a, b), a.value_ * b.value_); }

NumberField::NumberField(AlgebraicReal generator)
    : gen_(std::move(generator)), mod_(std::make_shared<const RatPoly>(monic(to_rat_poly(gen_.minpoly())))) {}

NFElem NumberField::gen() const { return NFElem(mod_, RatPoly::x()); }

NFElem NumberField::from_rat(const Rat& v) const { return NFElem(mod_, RatPoly::constant(v)); }

NFElem NumberField::from_poly(const RatPoly& p) const { return NFElem(mod_, p); }

Matrix<NFElem> NumberField::embed(const Matrix<Rat>& m) const {
  return m.map([this](const Rat& v) { return from_rat(v); });
}

double NumberField::approx(const NFElem& e) const {
  const double x = gen_.approx();
  double acc = 0;
  const auto& c = e.value().coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i].get_d();
  return acc;
}

int nf_rank(const Matrix<NFElem>& m) { return rank_field(m); }

}  // namespace novikov
