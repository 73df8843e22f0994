#include "novikov/exact/algebraic.hpp"

#include "novikov/exact/factor.hpp"
#include "novikov/exact/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace novikov {

namespace {

int roots_in(const IntPoly& p, const Rat& lo, const Rat& hi) {
  return sturm_count(sturm_sequence(p), lo, hi);
}

Rat rat_pow(const Rat& base, int k) {
  Rat r = 1;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

}  // namespace

AlgebraicReal::AlgebraicReal(const IntPoly& minpoly, const Rat& lo, const Rat& hi)
    : minpoly_(primitive_part(minpoly)), lo_(lo), hi_(hi) {
  if (minpoly_.degree() < 1) throw std::invalid_argument("algebraic number needs a nonconstant polynomial");
  if (!(lo_ < hi_)) throw std::invalid_argument("isolating interval must satisfy lo < hi");
  if (!is_irreducible(minpoly_)) {
    throw std::invalid_argument("polynomial " + to_string(minpoly_) + " is not irreducible over Q");
  }
  if (sign_at(minpoly_, lo_) == 0 || sign_at(minpoly_, hi_) == 0) {
    throw std::invalid_argument("interval endpoint is a root");
  }
  if (roots_in(minpoly_, lo_, hi_) != 1) {
    throw std::invalid_argument("interval does not isolate exactly one root of " + to_string(minpoly_));
  }
}

AlgebraicReal AlgebraicReal::trusted(IntPoly minpoly, Rat lo, Rat hi) {
  AlgebraicReal a;
  a.minpoly_ = std::move(minpoly);
  a.lo_ = std::move(lo);
  a.hi_ = std::move(hi);
  return a;
}

AlgebraicReal AlgebraicReal::from_rational(const Rat& value) {
  IntPoly p(std::vector<Int>{Int(-value.get_num()), value.get_den()});
  return trusted(p, value - 1, value + 1);
}

Rat AlgebraicReal::rational_value() const {
  if (!is_rational()) throw std::logic_error("algebraic number is irrational");
  return Rat(-minpoly_.coeff(0), minpoly_.coeff(1));
}

AlgebraicReal AlgebraicReal::bisected() const {
  if (is_rational()) {
    Rat v = rational_value();
    Rat quarter = (hi_ - lo_) / 4;
    return trusted(minpoly_, v - quarter, v + quarter);
  }
  Rat mid = (lo_ + hi_) / 2;
  // Irreducible of degree >= 2: no rational point is a root.
  if (roots_in(minpoly_, lo_, mid) == 1) return trusted(minpoly_, lo_, mid);
  return trusted(minpoly_, mid, hi_);
}

AlgebraicReal AlgebraicReal::refined(const Rat& width) const {
  if (width <= 0) throw std::invalid_argument("refinement width must be positive");
  AlgebraicReal a = *this;
  if (a.is_rational()) {
    Rat v = a.rational_value();
    if (a.hi_ - a.lo_ > width) return trusted(a.minpoly_, v - width / 4, v + width / 4);
    return a;
  }
  auto seq = sturm_sequence(minpoly_);
  while (a.hi_ - a.lo_ > width) {
    Rat mid = (a.lo_ + a.hi_) / 2;
    if (sturm_count(seq, a.lo_, mid) == 1) {
      a.hi_ = mid;
    } else {
      a.lo_ = mid;
    }
  }
  return a;
}

int AlgebraicReal::sign() const {
  if (is_rational()) return sgn(rational_value());
  AlgebraicReal a = *this;
  while (a.lo_ < 0 && a.hi_ > 0) a = a.bisected();
  return a.lo_ >= 0 ? 1 : -1;
}

double AlgebraicReal::approx() const {
  if (is_rational()) return rational_value().get_d();
  Rat scale = std::max(Rat(1), std::max(Rat(abs(lo_)), Rat(abs(hi_))));
  Int denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, 60);
  AlgebraicReal a = refined(scale / Rat(denom));
  return Rat((a.lo_ + a.hi_) / 2).get_d();
}

std::vector<RealRoot> isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
  std::vector<RealRoot> roots;
  for (const auto& [f, mult] : factor(p)) {
    if (f.degree() == 1) {
      roots.push_back({AlgebraicReal::from_rational(Rat(-f.coeff(0), f.coeff(1))), mult});
      continue;
    }
    auto seq = sturm_sequence(f);
    Rat bound = root_bound(f);
    std::vector<std::pair<Rat, Rat>> pending{{-bound, bound}};
    while (!pending.empty()) {
      auto [lo, hi] = pending.back();
      pending.pop_back();
      int n = sturm_count(seq, lo, hi);
      if (n == 0) continue;
      if (n == 1) {
        roots.push_back({AlgebraicReal::trusted(f, lo, hi), mult});
        continue;
      }
      Rat mid = (lo + hi) / 2;
      pending.emplace_back(lo, mid);
      pending.emplace_back(mid, hi);
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& a, const RealRoot& b) { return compare(a.value, b.value) < 0; });
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    while (roots[i].value.hi() > roots[i + 1].value.lo()) {
      roots[i].value = roots[i].value.bisected();
      roots[i + 1].value = roots[i + 1].value.bisected();
    }
  }
  return roots;
}

int count_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  if (p.degree() < 1) return 0;
  // Real roots of p are those of its square-free part.
  RatPoly f = to_rat_poly(p);
  RatPoly sf = divmod(f, gcd(f, f.derivative())).first;
  IntPoly q = primitive_part(sf);
  Rat bound = root_bound(q);
  return sturm_count(sturm_sequence(q), -bound, bound);
}

bool alg_eq(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.minpoly() != b.minpoly()) return false;
  Rat lo = std::max(a.lo(), b.lo());
  Rat hi = std::min(a.hi(), b.hi());
  if (!(lo < hi)) return false;
  return roots_in(a.minpoly(), lo, hi) >= 1;
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (alg_eq(a, b)) return 0;
  AlgebraicReal x = a, y = b;
  for (;;) {
    if (x.hi() <= y.lo()) return -1;
    if (y.hi() <= x.lo()) return 1;
    x = x.bisected();
    y = y.bisected();
  }
}

AlgebraicReal alg_reciprocal(const AlgebraicReal& a) {
  if (a.is_rational()) {
    Rat v = a.rational_value();
    if (v == 0) throw std::domain_error("reciprocal of zero");
    return AlgebraicReal::from_rational(1 / v);
  }
  AlgebraicReal x = a;
  while (x.lo() < 0 && x.hi() > 0) x = x.bisected();
  // Endpoint zero is allowed: its reciprocal side is unbounded, so step in.
  while (x.lo() == 0 || x.hi() == 0) x = x.bisected();
  return AlgebraicReal::trusted(primitive_part(reverse(x.minpoly())), 1 / x.hi(), 1 / x.lo());
}

AlgebraicReal alg_neg(const AlgebraicReal& a) {
  if (a.is_rational()) return AlgebraicReal::from_rational(-a.rational_value());
  return AlgebraicReal::trusted(primitive_part(negate_variable(a.minpoly())), -a.hi(), -a.lo());
}

AlgebraicReal alg_pow(const AlgebraicReal& a, int k) {
  if (k == 0) return AlgebraicReal::from_rational(1);
  if (k < 0) return alg_reciprocal(alg_pow(a, -k));
  if (k == 1) return a;
  if (a.is_rational()) return AlgebraicReal::from_rational(rat_pow(a.rational_value(), k));

  // Characteristic polynomial of multiplication by x^k in Q[x]/(minpoly).
  const int d = a.degree();
  RatPoly m = to_rat_poly(a.minpoly());
  RatPoly b = RatPoly::monomial(Rat(1), static_cast<std::size_t>(k)) % m;
  Matrix<Rat> mult(d, d);
  RatPoly col = b;
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) mult(i, j) = col.coeff(static_cast<std::size_t>(i));
    col = (col * RatPoly::x()) % m;
  }
  std::vector<IntPoly> candidates;
  for (const auto& [f, mult_f] : factor(char_poly(mult))) candidates.push_back(f);

  AlgebraicReal x = a;
  for (;;) {
    while (x.lo() <= 0 && x.hi() >= 0) x = x.bisected();
    Rat lo = rat_pow(x.lo(), k), hi = rat_pow(x.hi(), k);
    if (lo > hi) std::swap(lo, hi);
    int total = 0;
    const IntPoly* hit = nullptr;
    bool endpoint_root = false;
    for (const auto& f : candidates) {
      if (sign_at(f, lo) == 0 || sign_at(f, hi) == 0) {
        endpoint_root = true;
        break;
      }
      int n = roots_in(f, lo, hi);
      total += n;
      if (n > 0) hit = &f;
    }
    if (!endpoint_root && total == 1) {
      if (hit->degree() == 1) return AlgebraicReal::from_rational(Rat(-hit->coeff(0), hit->coeff(1)));
      return AlgebraicReal::trusted(*hit, lo, hi);
    }
    x = x.bisected();
  }
}

std::string to_string(const AlgebraicReal& a) {
  if (a.is_rational()) return to_string(a.rational_value());
  return "root of " + to_string(a.minpoly()) + " in (" + to_string(a.lo()) + ", " + to_string(a.hi()) + ")";
}

}  // namespace novikov
