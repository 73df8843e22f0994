#include "novikov/exact/factor.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>

namespace novikov {
namespace {

using i64 = std::int64_t;
// Dense polynomial over Z/p, lowest degree first, trimmed.
using ZPoly = std::vector<i64>;

class PrimeField {
 public:
  explicit PrimeField(i64 p) : p_(p) {}
  i64 p() const { return p_; }
  i64 norm(i64 a) const {
    a %= p_;
    return a < 0 ? a + p_ : a;
  }
  i64 mul(i64 a, i64 b) const { return (a * b) % p_; }
  i64 inv(i64 a) const {
    i64 t = 0, new_t = 1, r = p_, new_r = norm(a);
    while (new_r != 0) {
      i64 q = r / new_r;
      i64 tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (r != 1) throw std::logic_error("non-invertible residue");
    return norm(t);
  }

  void trim(ZPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  int deg(const ZPoly& a) const { return static_cast<int>(a.size()) - 1; }

  ZPoly add(const ZPoly& a, const ZPoly& b) const {
    ZPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = norm(c[i] + b[i]);
    trim(c);
    return c;
  }
  ZPoly sub(const ZPoly& a, const ZPoly& b) const {
    ZPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = norm(c[i] - b[i]);
    trim(c);
    return c;
  }
  ZPoly mul(const ZPoly& a, const ZPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
    }
    trim(c);
    return c;
  }
  ZPoly scale(const ZPoly& a, i64 s) const {
    ZPoly c = a;
    for (auto& v : c) v = mul(v, norm(s));
    trim(c);
    return c;
  }
  std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b) const {
    if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
    if (a.size() < b.size()) return {{}, a};
    ZPoly r = a;
    ZPoly q(a.size() - b.size() + 1, 0);
    i64 inv_lc = inv(b.back());
    for (int i = deg(a); i >= deg(b); --i) {
      i64 f = mul(r[i], inv_lc);
      if (f == 0) continue;
      q[i - deg(b)] = f;
      for (int j = 0; j <= deg(b); ++j) r[i - deg(b) + j] = norm(r[i - deg(b) + j] - f * b[j]);
    }
    trim(q);
    trim(r);
    return {q, r};
  }
  ZPoly rem(const ZPoly& a, const ZPoly& b) const { return divmod(a, b).second; }
  ZPoly monic(const ZPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }
  ZPoly gcd(ZPoly a, ZPoly b) const {
    while (!b.empty()) {
      ZPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s*a + t*b = 1 for coprime a, b.
  std::pair<ZPoly, ZPoly> bezout(const ZPoly& a, const ZPoly& b) const {
    ZPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      ZPoly s2 = sub(s0, mul(q, s1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      ZPoly t2 = sub(t0, mul(q, t1));
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.size() != 1) throw std::logic_error("bezout: factors not coprime mod p");
    i64 inv0 = inv(r0[0]);
    return {scale(s0, inv0), scale(t0, inv0)};
  }
  ZPoly powmod(ZPoly base, const Int& exponent, const ZPoly& modulus) const {
    ZPoly result{1};
    base = rem(base, modulus);
    std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), modulus);
      if (mpz_tstbit(exponent.get_mpz_t(), i)) result = rem(mul(result, base), modulus);
    }
    return result;
  }
  ZPoly derivative(const ZPoly& a) const {
    ZPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mul(a[i], norm(static_cast<i64>(i))));
    trim(d);
    return d;
  }
  ZPoly reduce(const IntPoly& f) const {
    ZPoly c;
    for (const auto& v : f.coefficients()) {
      c.push_back(static_cast<i64>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_))));
    }
    trim(c);
    return c;
  }

 private:
  i64 p_;
};

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<ZPoly, int>> distinct_degree(const PrimeField& F, ZPoly f) {
  std::vector<std::pair<ZPoly, int>> out;
  const ZPoly x{0, 1};
  ZPoly h = F.rem(x, f);
  int d = 0;
  while (F.deg(f) >= 2 * (d + 1)) {
    ++d;
    h = F.powmod(h, Int(F.p()), f);
    ZPoly g = F.gcd(f, F.sub(h, x));
    if (F.deg(g) > 0) {
      out.emplace_back(g, d);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (F.deg(f) > 0) out.emplace_back(F.monic(f), F.deg(f));
  return out;
}

void equal_degree(const PrimeField& F, const ZPoly& f, int d, std::mt19937_64& rng,
                  std::vector<ZPoly>& out) {
  if (F.deg(f) == d) {
    out.push_back(f);
    return;
  }
  Int exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), static_cast<unsigned long>(F.p()), static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  std::uniform_int_distribution<i64> coef(0, F.p() - 1);
  for (;;) {
    ZPoly a(F.deg(f), 0);
    for (auto& v : a) v = coef(rng);
    F.trim(a);
    if (F.deg(a) < 1) continue;
    ZPoly g = F.gcd(a, f);
    if (F.deg(g) > 0 && F.deg(g) < F.deg(f)) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, F.monic(F.divmod(f, g).first), d, rng, out);
      return;
    }
    ZPoly b = F.sub(F.powmod(a, exponent, f), ZPoly{1});
    g = F.gcd(b, f);
    if (F.deg(g) > 0 && F.deg(g) < F.deg(f)) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, F.monic(F.divmod(f, g).first), d, rng, out);
      return;
    }
  }
}

std::vector<ZPoly> factor_mod_p(const PrimeField& F, const ZPoly& f_monic) {
  std::mt19937_64 rng(0x5eed5eedULL + static_cast<std::uint64_t>(F.p()));
  std::vector<ZPoly> out;
  for (const auto& [g, d] : distinct_degree(F, f_monic)) equal_degree(F, g, d, rng, out);
  return out;
}

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int mod_symmetric(const Int& a, const Int& m) {
  Int r = mod_floor(a, m);
  if (2 * r > m) r -= m;
  return r;
}

IntPoly lift_to_int(const ZPoly& a) {
  std::vector<Int> c;
  for (auto v : a) c.emplace_back(static_cast<long>(v));
  return IntPoly(std::move(c));
}

IntPoly reduce_mod(const IntPoly& a, const Int& m, bool symmetric) {
  std::vector<Int> c;
  for (const auto& v : a.coefficients()) c.push_back(symmetric ? mod_symmetric(v, m) : mod_floor(v, m));
  return IntPoly(std::move(c));
}

// Linear Hensel lifting of f = g*h (mod p) to modulus `target`, g monic.
std::pair<IntPoly, IntPoly> hensel_lift(const IntPoly& f, const ZPoly& g, const ZPoly& h,
                                        const PrimeField& F, const Int& target) {
  auto [s, t] = F.bezout(g, h);
  IntPoly G = lift_to_int(g);
  std::vector<Int> hc = lift_to_int(h).coefficients();
  hc.back() = f.lc();
  IntPoly H(std::move(hc));
  Int m = F.p();
  while (m < target) {
    IntPoly err = f - G * H;
    std::vector<Int> ec;
    for (const auto& v : err.coefficients()) {
      Int q;
      mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
      ec.push_back(q);
    }
    ZPoly e = F.reduce(IntPoly(std::move(ec)));
    auto [q, a] = F.divmod(F.mul(e, t), g);
    ZPoly b = F.add(F.mul(e, s), F.mul(q, h));
    G = G + m * lift_to_int(a);
    H = H + m * lift_to_int(b);
    m *= F.p();
  }
  return {reduce_mod(G, target, false), H};
}

Int mignotte_target(const IntPoly& f) {
  Int maxabs = 0;
  for (const auto& v : f.coefficients()) {
    if (abs(v) > maxabs) maxabs = abs(v);
  }
  Int pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(f.degree()));
  return 2 * Int(f.degree() + 1) * pow2 * maxabs * abs(f.lc()) + 1;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Exact quotient a / b over Z when b divides a.
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  auto [q, r] = divmod(to_rat_poly(a), to_rat_poly(b));
  if (!r.is_zero()) return std::nullopt;
  std::vector<Int> c;
  for (const auto& v : q.coefficients()) {
    if (v.get_den() != 1) return std::nullopt;
    c.push_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

}  // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& input) {
  IntPoly f = primitive_part(input);
  if (f.degree() < 1) throw std::invalid_argument("factor_squarefree: constant polynomial");
  if (f.degree() == 1) return {f};

  // Pick the prime with the fewest modular factors among the first few
  // primes that keep f square-free and its degree intact.
  std::optional<PrimeField> best;
  std::vector<ZPoly> best_factors;
  int candidates = 0;
  for (i64 p = 3; p < 100000 && candidates < 4; p += 2) {
    if (!is_prime(p)) continue;
    PrimeField F(p);
    ZPoly fp = F.reduce(f);
    if (F.deg(fp) != f.degree()) continue;
    ZPoly dfp = F.derivative(fp);
    if (dfp.empty() || F.deg(F.gcd(fp, dfp)) != 0) continue;
    auto facs = factor_mod_p(F, F.monic(fp));
    ++candidates;
    if (!best || facs.size() < best_factors.size()) {
      best = F;
      best_factors = std::move(facs);
    }
    if (best_factors.size() == 1) break;
  }
  if (!best) throw std::runtime_error("factor: no suitable prime found");
  if (best_factors.size() == 1) return {f};

  const PrimeField& F = *best;
  const Int target = mignotte_target(f);
  Int modulus = F.p();
  while (modulus < target) modulus *= F.p();

  // Multifactor lift by peeling one monic factor at a time.
  std::vector<IntPoly> lifted;
  IntPoly rest = f;
  const i64 lc_mod = F.norm(static_cast<i64>(mpz_fdiv_ui(f.lc().get_mpz_t(), F.p())));
  for (std::size_t i = 0; i + 1 < best_factors.size(); ++i) {
    ZPoly h{lc_mod};
    for (std::size_t j = i + 1; j < best_factors.size(); ++j) h = F.mul(h, best_factors[j]);
    auto [G, H] = hensel_lift(rest, best_factors[i], h, F, modulus);
    lifted.push_back(G);
    rest = H;
  }
  {
    Int lc_inv;
    mpz_invert(lc_inv.get_mpz_t(), f.lc().get_mpz_t(), modulus.get_mpz_t());
    lifted.push_back(reduce_mod(lc_inv * rest, modulus, false));
  }

  std::vector<IntPoly> result;
  IntPoly remaining = f;
  std::size_t subset = 1;
  while (2 * subset <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(subset);
    for (std::size_t i = 0; i < subset; ++i) idx[i] = i;
    do {
      IntPoly candidate = IntPoly::constant(remaining.lc());
      for (auto i : idx) candidate = reduce_mod(candidate * lifted[i], modulus, false);
      candidate = primitive_part(reduce_mod(candidate, modulus, true));
      if (candidate.degree() < 1) continue;
      if (auto q = exact_quotient(remaining, candidate)) {
        result.push_back(candidate);
        remaining = primitive_part(*q);
        for (std::size_t k = idx.size(); k-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
        found = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!found) ++subset;
  }
  if (remaining.degree() > 0) result.push_back(remaining);
  return result;
}

std::vector<std::pair<IntPoly, int>> factor(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  std::vector<std::pair<IntPoly, int>> out;
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    for (auto& irreducible : factor_squarefree(part)) out.emplace_back(std::move(irreducible), mult);
  }
  return out;
}

bool is_irreducible(const IntPoly& p) {
  if (p.degree() < 1) return false;
  auto f = factor(p);
  return f.size() == 1 && f.front().second == 1;
}

}  // namespace novikov
