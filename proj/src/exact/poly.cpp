#include "novikov/exact/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace novikov {

RatPoly to_rat_poly(const IntPoly& p) {
  std::vector<Rat> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  Int common_den = 1;
  for (const auto& v : p.coefficients()) {
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), v.get_den_mpz_t());
  }
  std::vector<Int> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) {
    Rat scaled = v * Rat(common_den);
    c.push_back(scaled.get_num());
  }
  return primitive_part(IntPoly(std::move(c)));
}

Int content(const IntPoly& p) {
  Int g = 0;
  for (const auto& v : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  Int g = content(p);
  if (p.lc() < 0) g = -g;
  std::vector<Int> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.push_back(Int(v / g));
  return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rat> rem = a.coefficients();
  std::vector<Rat> quo(a.degree() - b.degree() + 1, Rat(0));
  const auto& bc = b.coefficients();
  const Rat inv_lc = 1 / b.lc();
  for (int i = a.degree(); i >= b.degree(); --i) {
    Rat f = rem[i] * inv_lc;
    if (f == 0) continue;
    quo[i - b.degree()] = f;
    for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= f * bc[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return Rat(1 / p.lc()) * p;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(1), s1;
  RatPoly t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    RatPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat inv = 1 / r0.lc();
  return {inv * r0, inv * s0, inv * t0};
}

int sign_at(const IntPoly& p, const Rat& at) { return sgn(p.eval<Rat>(at)); }

IntPoly negate_variable(const IntPoly& p) {
  std::vector<Int> c = p.coefficients();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPoly(std::move(c));
}

IntPoly reverse(const IntPoly& p) {
  std::vector<Int> c = p.coefficients();
  std::reverse(c.begin(), c.end());
  return IntPoly(std::move(c));
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() == 0) return out;
  RatPoly f = to_rat_poly(p);
  RatPoly df = f.derivative();
  RatPoly a0 = gcd(f, df);
  RatPoly b = divmod(f, a0).first;
  RatPoly c = divmod(df, a0).first;
  RatPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    RatPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(primitive_part(a), i);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<RatPoly> sturm_sequence(const IntPoly& p) {
  std::vector<RatPoly> seq;
  RatPoly f = to_rat_poly(p);
  seq.push_back(f);
  seq.push_back(f.derivative());
  while (!seq.back().is_zero()) {
    RatPoly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    // Positive rescaling keeps the sign pattern and limits coefficient growth.
    seq.push_back(Rat(-1 / abs(r.lc())) * r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_variations(const std::vector<RatPoly>& sturm, const Rat& at) {
  int variations = 0;
  int last = 0;
  for (const auto& q : sturm) {
    int s = sgn(q.eval<Rat>(at));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int sturm_count(const std::vector<RatPoly>& sturm, const Rat& lo, const Rat& hi) {
  return sign_variations(sturm, lo) - sign_variations(sturm, hi);
}

Rat root_bound(const IntPoly& p) {
  if (p.degree() < 1) return Rat(1);
  Rat m = 0;
  const Rat lead = abs(p.lc());
  for (int i = 0; i < p.degree(); ++i) {
    Rat q = abs(Rat(p.coefficients()[i])) / lead;
    if (q > m) m = q;
  }
  return m + 1;
}

std::string to_string(const IntPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Int& c = p.coefficients()[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace novikov
