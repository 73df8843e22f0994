#include "doctest.h"

#include "novikov/catalog.hpp"

#include <random>

using namespace novikov;

namespace {

AlgebraicReal q(long p, long d = 1) { return AlgebraicReal::from_rational(make_rat(p, d)); }

std::vector<int> rev(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Positive algebraic numbers: random rationals and roots of x^2 - m.
std::vector<AlgebraicReal> random_lambdas(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<AlgebraicReal> out;
  while (static_cast<int>(out.size()) < count) {
    if (out.size() % 2 == 0) {
      out.push_back(q(1 + rng() % 40, 1 + rng() % 17));
    } else {
      long m = 2 + rng() % 30;
      auto roots = isolate_real_roots(IntPoly(std::vector<Int>{Int(-m), Int(0), Int(1)}));
      if (roots.size() == 2 && roots.back().value.degree() == 2) out.push_back(roots.back().value);
    }
  }
  return out;
}

std::vector<FiberModel> catalog_fibers() {
  return {make_s0(s0_default_matrix()).fiber, make_splus(splus_default()).fiber,
          make_sminus(sminus_default()).fiber, make_hopf(), torus_identity(2), torus_identity(3)};
}

}  // namespace

TEST_CASE("S0 golden profiles") {
  auto s0 = make_s0(s0_default_matrix());
  CHECK(to_string(s0.alpha.minpoly()) == "x^3 - x - 1");
  CHECK(twisted_betti(s0.fiber, s0.alpha).betti == std::vector<int>{0, 0, 1, 1, 0});
  CHECK(twisted_betti(s0.fiber, alg_reciprocal(s0.alpha)).betti == std::vector<int>{0, 1, 1, 0, 0});
  CHECK(twisted_betti(s0.fiber, q(2)).betti == std::vector<int>{0, 0, 0, 0, 0});
  CHECK(twisted_betti(s0.fiber, q(1)).betti == std::vector<int>{1, 1, 0, 1, 1});
}

TEST_CASE("S+ and S- descriptor profiles") {
  auto sp = make_splus(splus_default());
  CHECK(to_string(sp.alpha.minpoly()) == "x^2 - 3x + 1");
  CHECK(twisted_betti(sp.fiber, sp.alpha).betti == std::vector<int>{0, 1, 2, 1, 0});
  auto sm = make_sminus(sminus_default());
  CHECK(twisted_betti(sm.fiber, sm.alpha).betti == std::vector<int>{0, 0, 1, 1, 0});
  CHECK(twisted_betti(sm.fiber, alg_reciprocal(sm.alpha)).betti == std::vector<int>{0, 1, 1, 0, 0});
}

TEST_CASE("Hopf and Kato") {
  CHECK(twisted_betti(make_hopf(), q(2)).betti == std::vector<int>{0, 0, 0, 0, 0});
  CHECK(twisted_betti(make_hopf(), q(1)).betti == std::vector<int>{1, 1, 0, 1, 1});
  CHECK(make_kato(7, q(3)).betti == std::vector<int>{0, 0, 7, 0, 0});
  CHECK_THROWS(make_kato(0, q(3)));
}

TEST_CASE("non-positive lambda rejected") {
  CHECK_THROWS_WITH(twisted_betti(make_hopf(), q(0)), "Lee parameter must be positive");
  CHECK_THROWS_WITH(twisted_betti(make_hopf(), q(-2)), "Lee parameter must be positive");
}

TEST_CASE("kappa degree range") {
  CHECK_THROWS_AS(kappa(make_hopf(), q(1), 4), std::out_of_range);
  CHECK_THROWS_AS(kappa(make_hopf(), q(1), -1), std::out_of_range);
}

TEST_CASE("exceptional sets") {
  auto s0 = make_s0(s0_default_matrix());
  auto ex = exceptional_lambdas(s0.fiber);
  REQUIRE(ex.size() == 3);
  CHECK(alg_eq(ex[0], alg_reciprocal(s0.alpha)));
  CHECK(alg_eq(ex[1], q(1)));
  CHECK(alg_eq(ex[2], s0.alpha));
  auto h = exceptional_lambdas(make_hopf());
  REQUIRE(h.size() == 1);
  CHECK(alg_eq(h[0], q(1)));
  auto sp = make_splus(splus_default());
  auto e2 = exceptional_lambdas(sp.fiber);
  REQUIRE(e2.size() == 3);
  CHECK(alg_eq(e2[0], alg_reciprocal(sp.alpha)));
  CHECK(alg_eq(e2[2], sp.alpha));
}

TEST_CASE("vanishing off the exceptional set and vanishing end degrees") {
  for (const auto& f : catalog_fibers()) {
    auto ex = exceptional_lambdas(f);
    for (const auto& l : random_lambdas(10, 7)) {
      bool exceptional = false;
      for (const auto& e : ex) exceptional = exceptional || alg_eq(e, l);
      auto b = twisted_betti(f, l).betti;
      if (!exceptional) CHECK(std::all_of(b.begin(), b.end(), [](int v) { return v == 0; }));
      if (!alg_eq(l, q(1))) CHECK((b.front() == 0 && b.back() == 0));
    }
  }
}

TEST_CASE("blow_up and euler") {
  BettiProfile p{q(2), {0, 0, 0, 0, 0}};
  CHECK(blow_up(p, 5).betti == std::vector<int>{0, 0, 5, 0, 0});
  CHECK(blow_up(p, 0).betti == p.betti);
  BettiProfile s{q(2), {0, 0, 1, 1, 0}};
  CHECK(blow_up(s, 2).betti == std::vector<int>{0, 0, 3, 1, 0});
  CHECK(euler_char(s) == 0);
  CHECK(euler_char({q(2), {0, 1, 2, 1, 0}}) == 0);
  CHECK(euler_char({q(2), {0, 0, 5, 0, 0}}) == 5);
  CHECK_THROWS(blow_up({q(2), {0, 0, 0}}, 1));
}

TEST_CASE("duality and euler invariance on the catalog") {
  auto lambdas = random_lambdas(20, 2024);
  for (const auto& f : catalog_fibers()) {
    auto pts = lambdas;
    for (const auto& e : exceptional_lambdas(f)) pts.push_back(e);
    for (const auto& l : pts) {
      auto b = twisted_betti(f, l);
      CHECK(rev(b.betti) == twisted_betti(f, alg_reciprocal(l)).betti);
      CHECK(euler_char(b) == 0);
    }
  }
}

TEST_CASE("identity monodromy recovers torus Betti numbers") {
  for (int n = 1; n <= 5; ++n) {
    auto b = twisted_betti(torus_identity(n), q(1)).betti;
    REQUIRE(static_cast<int>(b.size()) == n + 2);
    for (int k = 0; k <= n + 1; ++k) CHECK(b[k] == binom(n + 1, k));
  }
}

TEST_CASE("torus and eigen modes agree") {
  auto hyper = Matrix<Rat>::from_rows({{2, 1}, {1, 1}});
  for (const auto& A : {s0_default_matrix(), hyper, Matrix<Rat>::from_rows({{0, -1}, {1, 0}}),
                        Matrix<Rat>::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}), Matrix<Rat>::identity(4)}) {
    auto t = FiberModel::torus_monodromy(A);
    auto e = to_eigen_descriptor(t);
    CHECK(e.mode() == FiberModel::Mode::EigenDescriptor);
    auto pts = exceptional_lambdas(t);
    auto pe = exceptional_lambdas(e);
    REQUIRE(pts.size() == pe.size());
    pts.push_back(q(3));
    for (const auto& l : pts) CHECK(twisted_betti(t, l).betti == twisted_betti(e, l).betti);
  }
}

TEST_CASE("eigen encoding refuses a Jordan block") {
  auto t = FiberModel::torus_monodromy(Matrix<Rat>::from_rows({{1, 1}, {0, 1}}));
  CHECK(twisted_betti(t, q(1)).betti == std::vector<int>{1, 2, 2, 1});
  CHECK_THROWS_AS(to_eigen_descriptor(t), std::invalid_argument);
}

TEST_CASE("torus model construction rejects bad input") {
  CHECK_THROWS(FiberModel::torus_monodromy(Matrix<Rat>::from_rows({{2, 0}, {0, 1}})));
  CHECK_THROWS(FiberModel::torus_monodromy(Matrix<Rat>::from_rows({{Rat(1, 2), 0}, {0, 2}})));
  CHECK_THROWS(FiberModel::torus_monodromy(Matrix<Rat>::identity(7)));
  CHECK_THROWS(FiberModel::eigen_descriptor({1, 2}, {{EigenSpec::real(q(1))}, {EigenSpec::real(q(2))}}));
  CHECK_THROWS(FiberModel::eigen_descriptor({1, 1}, {{EigenSpec::real(q(1))}, {EigenSpec::conjugate_pair(1)}}));
  CHECK_THROWS(FiberModel::explicit_actions({Matrix<Rat>::identity(1), Matrix<Rat>::from_rows({{2}})}));
}

TEST_CASE("catalog fiber validation") {
  CHECK_THROWS(make_s0(Matrix<Rat>::identity(3)));
  CHECK_THROWS(make_s0(Rat(-1) * Matrix<Rat>::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})));
  auto bad = splus_default();
  CHECK_THROWS(make_sminus(bad));
  auto second = splus_default();
  second.N = Matrix<Rat>::from_rows({{3, 1}, {2, 1}});
  auto sp = make_splus(second);
  CHECK(twisted_betti(sp.fiber, sp.alpha).betti == std::vector<int>{0, 1, 2, 1, 0});
  auto zero_r = splus_default();
  zero_r.r = 0;
  CHECK_THROWS(make_splus(zero_r));
  CHECK(compare(make_s0(s0_default_matrix()).alpha, q(1)) > 0);
}

TEST_CASE("format_betti") { CHECK(format_betti({0, 0, 1, 1, 0}) == "[0, 0, 1, 1, 0]"); }
