#include "doctest.h"

#include "novikov/exact/algebraic.hpp"
#include "novikov/exact/factor.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>

using namespace novikov;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}

IntPoly product(const std::vector<std::pair<IntPoly, int>>& f) {
  IntPoly acc = IntPoly::constant(1);
  for (const auto& [p, m] : f)
    for (int i = 0; i < m; ++i) acc = acc * p;
  return acc;
}

// Distinct real roots from companion-matrix eigenvalues.
int float_real_roots(const IntPoly& p) {
  const int n = p.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  const double lc = p.lc().get_d();
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i).get_d() / lc;
  Eigen::EigenSolver<Eigen::MatrixXd> es(c);
  std::vector<double> reals;
  for (int i = 0; i < n; ++i) {
    auto z = es.eigenvalues()[i];
    if (std::abs(z.imag()) < 1e-7) reals.push_back(z.real());
  }
  std::sort(reals.begin(), reals.end());
  int distinct = 0;
  for (std::size_t i = 0; i < reals.size(); ++i)
    if (i == 0 || reals[i] - reals[i - 1] > 1e-6) ++distinct;
  return distinct;
}

}  // namespace

TEST_CASE("parse_rat accepts fractions and decimals") {
  CHECK(parse_rat("3/6") == Rat(1, 2));
  CHECK(parse_rat("-1.25") == Rat(-5, 4));
  CHECK(parse_rat(" 7 ") == Rat(7));
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("abc"));
}

TEST_CASE("polynomial division and gcd") {
  RatPoly a = to_rat_poly(ip({-1, 0, 1}));  // x^2 - 1
  RatPoly b = to_rat_poly(ip({-1, 1}));
  auto [q, r] = divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == to_rat_poly(ip({1, 1})));
  CHECK(gcd(a, to_rat_poly(ip({1, 2, 1}))) == to_rat_poly(ip({1, 1})));
  auto e = extended_gcd(a, to_rat_poly(ip({2, 1})));
  CHECK(e.s * a + e.t * to_rat_poly(ip({2, 1})) == RatPoly::constant(1));
}

TEST_CASE("factor small polynomials") {
  auto f = factor(ip({-1, -1, 0, 1}));
  REQUIRE(f.size() == 1);
  CHECK(f[0].first == ip({-1, -1, 0, 1}));

  auto g = factor(ip({1, -2, 1}));  // (x-1)^2
  REQUIRE(g.size() == 1);
  CHECK(g[0].first == ip({-1, 1}));
  CHECK(g[0].second == 2);

  // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2): irreducible mod every prime
  // that splits it into linear factors, so recombination is exercised.
  auto h = factor(ip({4, 0, 0, 0, 1}));
  CHECK(h.size() == 2);
  CHECK(product(h) == ip({4, 0, 0, 0, 1}));

  CHECK(is_irreducible(ip({1, 0, 0, 0, 1})));  // x^4 + 1, reducible mod all p
  CHECK_FALSE(is_irreducible(ip({0, -2, 0, 1})));
  CHECK_THROWS(factor(IntPoly()));
}

TEST_CASE("factor products of random factors") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly p = IntPoly::constant(1);
    int parts = 1 + trial % 3;
    for (int i = 0; i < parts; ++i) {
      std::vector<Int> c;
      int d = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < d; ++k) c.emplace_back(coef(rng));
      c.emplace_back(1 + static_cast<long>(rng() % 3));
      p = p * IntPoly(c);
    }
    auto f = factor(p);
    IntPoly back = product(f);
    // Equal up to the content and sign.
    CHECK(primitive_part(back) == primitive_part(p));
    for (const auto& [q, m] : f) CHECK(is_irreducible(q));
  }
}

TEST_CASE("isolate_real_roots examples") {
  auto r = isolate_real_roots(ip({-2, 0, 1}));
  REQUIRE(r.size() == 2);
  CHECK(r[0].value.approx() == doctest::Approx(-std::sqrt(2.0)));
  CHECK(r[1].value.approx() == doctest::Approx(std::sqrt(2.0)));
  CHECK(r[0].multiplicity == 1);
  CHECK(r[0].value.hi() <= r[1].value.lo());

  auto rho = isolate_real_roots(ip({-1, -1, 0, 1}));
  REQUIRE(rho.size() == 1);
  CHECK(rho[0].value.approx() == doctest::Approx(1.324717957244746));
  CHECK(rho[0].value.lo() >= -3);

  auto sq = isolate_real_roots(ip({1, -2, 1}));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].multiplicity == 2);
  CHECK(sq[0].value.rational_value() == 1);

  CHECK_THROWS(isolate_real_roots(IntPoly()));
}

TEST_CASE("checked constructor rejects bad data") {
  CHECK_NOTHROW(AlgebraicReal(ip({-2, 0, 1}), Rat(1), Rat(2)));
  CHECK_THROWS(AlgebraicReal(ip({-2, 0, 1}), Rat(-2), Rat(2)));   // two roots
  CHECK_THROWS(AlgebraicReal(ip({-4, 0, 1}), Rat(1), Rat(3)));    // reducible
  CHECK_THROWS(AlgebraicReal(ip({-2, 0, 1}), Rat(2), Rat(3)));    // no root
}

TEST_CASE("alg_eq, compare and reciprocal") {
  AlgebraicReal sqrt2(ip({-2, 0, 1}), Rat(1), Rat(2));
  AlgebraicReal narrow(ip({-2, 0, 1}), Rat(14, 10), Rat(15, 10));
  AlgebraicReal minus(ip({-2, 0, 1}), Rat(-2), Rat(-1));
  CHECK(alg_eq(sqrt2, narrow));
  CHECK_FALSE(alg_eq(sqrt2, minus));
  CHECK(alg_eq(AlgebraicReal::from_rational(2), AlgebraicReal(ip({-2, 1}), Rat(0), Rat(5))));
  CHECK(compare(minus, sqrt2) < 0);
  CHECK(compare(sqrt2, AlgebraicReal::from_rational(Rat(3, 2))) < 0);

  CHECK(alg_reciprocal(AlgebraicReal::from_rational(2)).rational_value() == Rat(1, 2));
  CHECK(alg_reciprocal(AlgebraicReal::from_rational(1)).rational_value() == 1);

  AlgebraicReal rho(ip({-1, -1, 0, 1}), Rat(1), Rat(2));
  AlgebraicReal inv = alg_reciprocal(rho);
  CHECK(inv.minpoly() == ip({-1, 0, 1, 1}));
  CHECK(alg_eq(inv, AlgebraicReal(ip({-1, 0, 1, 1}), Rat(1, 2), Rat(1))));
  CHECK(alg_eq(alg_reciprocal(inv), rho));
  CHECK_THROWS(alg_reciprocal(AlgebraicReal::from_rational(0)));

  CHECK(alg_eq(alg_neg(minus), sqrt2));
  CHECK(alg_pow(sqrt2, 2).rational_value() == 2);
  CHECK(alg_pow(rho, 3).approx() == doctest::Approx(std::pow(1.324717957244746, 3)));
  CHECK(alg_pow(rho, -2).approx() == doctest::Approx(std::pow(1.324717957244746, -2)));
}

TEST_CASE("Sturm counts agree with a float root oracle on random polynomials") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> coef(-6, 6);
  int checked = 0;
  while (checked < 100) {
    int d = 1 + static_cast<int>(rng() % 6);
    std::vector<Int> c;
    for (int k = 0; k < d; ++k) c.emplace_back(coef(rng));
    long lead = coef(rng);
    if (lead == 0) lead = 1;
    c.emplace_back(lead);
    IntPoly p(c);
    if (p.degree() < 1) continue;
    // The float oracle is unreliable for repeated roots; compare on the
    // square-free part which has the same distinct real roots.
    RatPoly f = to_rat_poly(p);
    IntPoly sf = primitive_part(divmod(f, gcd(f, f.derivative())).first);
    CHECK(count_real_roots(p) == float_real_roots(sf));
    auto roots = isolate_real_roots(p);
    CHECK(static_cast<int>(roots.size()) == count_real_roots(p));
    for (const auto& r : roots) {
      CHECK(sturm_count(sturm_sequence(r.value.minpoly()), r.value.lo(), r.value.hi()) == 1);
    }
    // Real roots with multiplicity plus twice the complex pairs give the degree.
    int real_mult = 0;
    for (const auto& r : roots) real_mult += r.multiplicity;
    int complex_deg = 0;
    for (const auto& [q, m] : factor(p)) {
      complex_deg += m * (q.degree() - count_real_roots(q));
    }
    CHECK(real_mult + complex_deg == p.degree());
    CHECK(complex_deg % 2 == 0);
    ++checked;
  }
}
