#include "doctest.h"

#include "novikov/catalog.hpp"

#include <random>

using namespace novikov;

namespace {

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

InvariantForm random_form(int dim, int deg, std::mt19937& rng) {
  auto f = InvariantForm::zero(dim, deg);
  for (auto& c : f.coeffs) c = RatFunc(make_rat(static_cast<long>(rng() % 11) - 5, static_cast<long>(1 + rng() % 3)));
  return f;
}

std::vector<Rat> rats(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("validate accepts catalog algebras") {
  CHECK(validate(s0_algebra()).ok);
  CHECK(validate(splus_algebra()).ok);
  CHECK(validate(splus_algebra("3/2")).ok);
  CHECK(validate(splus_coframe_model()).ok);
  CHECK(validate(ot_algebra(1)).ok);
  CHECK(validate(ot_algebra(2, {"1/3", "alpha"})).ok);
  CHECK(validate(abelian4()).ok);
  CHECK(ot_algebra(1).dim() == 4);
  CHECK(!sminus_note().empty());
}

TEST_CASE("Jacobi violation reported with its triple") {
  LieAlgebraModel m(3);
  m.set_bracket(0, 1, {RatFunc(0), RatFunc(0), RatFunc(1)});
  m.set_bracket(0, 2, {RatFunc(1), RatFunc(0), RatFunc(0)});
  auto rep = validate(m);
  REQUIRE(!rep.ok);
  bool found = false;
  for (const auto& v : rep.violations) found = found || v.find("(1,2,3)") != std::string::npos;
  CHECK(found);
}

TEST_CASE("validate catches non-closed theta, bad J and undeclared parameters") {
  auto m = splus_algebra("0");
  m.theta = {RatFunc(1), RatFunc(0), RatFunc(0), RatFunc(0)};  // d e^1 != 0
  CHECK(!validate(m).ok);
  auto k = abelian4();
  (*k.J)(0, 1) = RatFunc(2);
  CHECK(!validate(k).ok);
  auto p = splus_algebra("b");
  p.params.clear();
  CHECK(!validate(p).ok);
}

TEST_CASE("S0 Tricerri form") {
  auto m = s0_algebra();
  const auto& omega = m.named_forms.at("omega");
  CHECK(d_theta_apply(m, omega).is_zero());
  CHECK(d_apply(m, omega) == wedge(4, one_form(m.theta), omega));
  // dx = 2r vartheta^x
  auto dx = d_apply(m, basis_form(4, {1}));
  CHECK(dx == RatFunc(2) * RatFunc::var("r") * basis_form(4, {0, 1}));
  CHECK(to_string(m, omega) == "-vartheta^x - y1^y2");
}

TEST_CASE("S+ coframe harmonicity suite") {
  auto m = splus_coframe_model();
  const auto& zeta = m.named_forms.at("zeta");
  const auto& h = m.named_forms.at("h");
  const auto& tau = m.named_forms.at("tau");
  const auto& omega = m.named_forms.at("omega");
  const auto& to = m.named_forms.at("theta_omega");
  CHECK(d_theta_apply(m, zeta).is_zero());
  CHECK(delta_theta(m, zeta).is_zero());
  CHECK(laplacian_theta(m, zeta).is_zero());
  CHECK(laplacian_theta(m, h).is_zero());
  CHECK(laplacian_theta(m, tau).is_zero());
  CHECK(laplacian_theta(m, to).is_zero());
  CHECK(d_theta_apply(m, omega).is_zero());
  CHECK(d_theta_apply(m, to).is_zero());
  CHECK(omega == d_theta_apply(m, RatFunc(-1) * m.named_forms.at("f4")) + h);
}

TEST_CASE("S0 theta^omega harmonic, symbolic in r and s") {
  auto m = s0_algebra();
  CHECK(laplacian_theta(m, m.named_forms.at("theta_omega")).is_zero());
}

TEST_CASE("d_theta squares to zero") {
  for (const auto& m : {s0_algebra(), splus_algebra(), splus_coframe_model(), ot_algebra(1), ot_algebra(2)}) {
    for (int p = 0; p < m.dim() - 1; ++p) {
      for (unsigned mask : wedge_basis(m.dim(), p)) {
        std::vector<int> idx;
        for (int i = 0; i < m.dim(); ++i)
          if (mask >> i & 1u) idx.push_back(i);
        CHECK(d_theta_apply(m, d_theta_apply(m, basis_form(m.dim(), idx))).is_zero());
      }
    }
  }
}

TEST_CASE("twisted CE cohomology") {
  CHECK(twisted_ce_cohomology(splus_algebra()) == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(twisted_ce_cohomology(abelian4()) == std::vector<int>{1, 4, 6, 4, 1});
  auto ot = twisted_ce_cohomology(ot_algebra(1));
  CHECK(ot.front() == 0);
  CHECK(ot.back() == 0);
  for (const auto& m : {splus_algebra(), s0_algebra(), ot_algebra(1), abelian4()}) {
    auto h = twisted_ce_cohomology(m);
    long chi = 0;
    for (std::size_t k = 0; k < h.size(); ++k) chi += (k % 2 ? -1 : 1) * h[k];
    CHECK(chi == 0);
  }
}

TEST_CASE("S+ algebra matches the fiber model at alpha") {
  auto sp = make_splus(splus_default());
  CHECK(twisted_ce_cohomology(splus_algebra()) == twisted_betti(sp.fiber, sp.alpha).betti);
}

TEST_CASE("hodge star") {
  auto m = splus_coframe_model();
  std::mt19937 rng(3);
  for (int k = 0; k <= 4; ++k) {
    auto f = random_form(4, k, rng);
    auto ss = hodge_star(m, hodge_star(m, f));
    CHECK(ss == RatFunc((k * (4 - k)) % 2 ? -1 : 1) * f);
  }
  CHECK(hodge_star(m, basis_form(4, {0, 1})) == basis_form(4, {2, 3}));
  CHECK_THROWS(hodge_star(splus_algebra(), basis_form(4, {0})));
}

TEST_CASE("adjointness of d_theta and delta_theta") {
  std::mt19937 rng(11);
  auto s0 = instantiate(s0_algebra(), {{"r", Rat(-1, 7)}, {"s", Rat(3, 5)}});
  for (const auto& m : {splus_coframe_model(), s0, abelian4()}) {
    for (int k = 0; k < 4; ++k) {
      for (int trial = 0; trial < 5; ++trial) {
        auto a = random_form(4, k, rng);
        auto b = random_form(4, k + 1, rng);
        CHECK(inner(d_theta_apply(m, a), b) == inner(a, delta_theta(m, b)));
      }
    }
  }
}

TEST_CASE("harmonic spaces") {
  CHECK(harmonic_dims(abelian4()) == std::vector<int>{1, 4, 6, 4, 1});
  auto m = splus_coframe_model();
  auto dims = harmonic_dims(m);
  CHECK(dims == twisted_ce_cohomology(m));
  auto h1 = harmonic_basis(m, 1);
  CHECK(in_span(m.named_forms.at("zeta"), h1));
  auto h2 = harmonic_basis(m, 2);
  CHECK(h2.size() >= 2);
  CHECK(in_span(m.named_forms.at("h"), h2));
  CHECK(in_span(m.named_forms.at("tau"), h2));
  CHECK_THROWS_WITH_AS(harmonic_dims(s0_algebra()), doctest::Contains("instantiate"), std::invalid_argument);
}

TEST_CASE("S0 invariant cohomology at the instantiated Lee class") {
  auto m = instantiate(s0_algebra(), {{"r", Rat(-1, 7)}, {"s", Rat(3, 5)}});
  auto dims = harmonic_dims(m);
  CHECK(dims == twisted_ce_cohomology(m));
}

TEST_CASE("obstruction certificates") {
  auto s0 = obstruction_search(s0_algebra());
  REQUIRE(s0);
  CHECK(s0->x == rats({0, 0, 1, 0}));
  CHECK(s0->description == "X = Y1");
  auto sp = obstruction_search(splus_algebra());
  REQUIRE(sp);
  CHECK(sp->x == rats({1, 0, 0, 0}));
  for (int s : {1, 2}) {
    auto m = ot_algebra(s);
    auto c = obstruction_search(m);
    REQUIRE(c);
    CHECK(c->description == "X = C1");
    CHECK(verify_obstruction(m, c->x));
  }
  CHECK(!verify_obstruction(s0_algebra(), rats({1, 0, 0, 0})));
  CHECK(!verify_obstruction(s0_algebra(), rats({0, 0, 0, 0})));
}

TEST_CASE("no obstruction on a model without one") {
  // Hyperbolic-type algebra where every J-line fails the bracket condition.
  LieAlgebraModel m(2);
  m.set_bracket(0, 1, {RatFunc(0), RatFunc(1)});
  Matrix<RatFunc> J(2, 2);
  J(0, 0) = RatFunc(0);
  J(1, 0) = RatFunc(1);
  J(0, 1) = RatFunc(-1);
  J(1, 1) = RatFunc(0);
  m.J = J;
  CHECK(!obstruction_search(m, 500));
}

TEST_CASE("wedge sign conventions") {
  CHECK(basis_form(4, {2, 0}) == RatFunc(-1) * basis_form(4, {0, 2}));
  auto a = basis_form(4, {1}), b = basis_form(4, {3});
  CHECK(wedge(4, a, b) == RatFunc(-1) * wedge(4, b, a));
  CHECK(wedge(4, a, a).is_zero());
  for (int k = 0; k <= 4; ++k) CHECK(static_cast<long>(wedge_basis(4, k).size()) == binom(4, k));
}
