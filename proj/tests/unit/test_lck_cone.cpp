#include "doctest.h"

#include "novikov/catalog.hpp"
#include "novikov/lck_cone.hpp"

#include <cmath>

using namespace novikov;

namespace {

LieAlgebraModel s0_numeric(bool inverse) {
  auto m = instantiate(s0_algebra(), s0_numeric_parameters(s0_default_matrix()));
  if (inverse)
    for (auto& t : m.theta) t = -t;
  return m;
}

Matrix<Rat> constant_J(const LieAlgebraModel& m) {
  return m.J->map([](const RatFunc& f) { return f.constant_value(); });
}

}  // namespace

TEST_CASE("numeric S0 parameters") {
  auto p = s0_numeric_parameters(s0_default_matrix());
  CHECK(std::abs(p.at("r").get_d() + std::log(1.324717957244746) / 2) < 1e-12);
  // |beta|^2 * alpha = 1 and Re beta = -alpha/2 fix arg beta.
  const double alpha = 1.324717957244746;
  CHECK(std::abs(std::cos(p.at("s").get_d()) - (-alpha / 2) * std::sqrt(alpha)) < 1e-12);
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(abelian4()).size() == 6);
  auto s0 = s0_numeric(false);
  auto k = kernel_basis(s0);
  CHECK(in_span(s0.named_forms.at("omega"), k));
  auto sp = splus_coframe_model();
  CHECK(in_span(sp.named_forms.at("omega"), kernel_basis(sp)));
  CHECK(in_span(sp.named_forms.at("omega"), lck_kernel_basis(sp)));
  CHECK_THROWS(kernel_basis(s0_algebra()));
}

TEST_CASE("positivity_check") {
  auto m = s0_numeric(false);
  auto J = constant_J(m);
  const auto& omega = m.named_forms.at("omega");
  CHECK(positivity_check(InvariantForm::zero(4, 2), J) == 0);
  CHECK(positivity_check(omega, J) > 0);
  CHECK(positivity_check(RatFunc(-1) * omega, J) < 0);
}

TEST_CASE("S0 cone at alpha and 1/alpha") {
  ConeOptions opt;
  auto m = s0_numeric(false);
  auto lck = taming_feasibility(m, TamingKind::Lck, opt);
  CHECK(lck.feasible);
  CHECK(lck.lambda_min > 0.05);
  CHECK(recheck_certificate(m, lck));
  auto inv = s0_numeric(true);
  auto tame = taming_feasibility(inv, TamingKind::Taming, opt);
  CHECK(!tame.feasible);
  CHECK(tame.lambda_min <= 1e-6);
  CHECK(tame.restarts_run == 64);
  CHECK(recheck_certificate(inv, tame));
}

TEST_CASE("feasible references") {
  auto sp = taming_feasibility(splus_coframe_model(), TamingKind::Lck);
  CHECK(sp.feasible);
  CHECK(recheck_certificate(splus_coframe_model(), sp));
  auto ab = taming_feasibility(abelian4(), TamingKind::Taming);
  CHECK(ab.feasible);
  CHECK(recheck_certificate(abelian4(), ab));
}

TEST_CASE("verdict unchanged under rescaling A and X") {
  // A' = cA, X' = cX keeps J and multiplies r, s and theta(A) by c.
  auto p = s0_numeric_parameters(s0_default_matrix());
  for (bool inverse : {false, true}) {
    auto base = s0_numeric(inverse);
    auto scaled = instantiate(s0_algebra(), {{"r", 3 * p.at("r")}, {"s", 3 * p.at("s")}});
    if (inverse)
      for (auto& t : scaled.theta) t = -t;
    for (auto kind : {TamingKind::Taming, TamingKind::Lck}) {
      CHECK(taming_feasibility(base, kind).feasible == taming_feasibility(scaled, kind).feasible);
    }
  }
}

TEST_CASE("S0 at 1/alpha: obstruction present, lck kernel degenerate") {
  auto m = s0_numeric(true);
  auto cert = obstruction_search(m);
  REQUIRE(cert);
  CHECK(verify_obstruction(m, cert->x));
  CHECK(twisted_ce_cohomology(m) == std::vector<int>{0, 1, 1, 0, 0});
  // Only vartheta^x survives; -vartheta^x is semidefinite with lambda_min 0.
  auto k = lck_kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(in_span(basis_form(4, {0, 1}), k));
  auto lck = taming_feasibility(m, TamingKind::Lck);
  CHECK(!lck.feasible);
  CHECK(std::abs(lck.lambda_min) < 1e-12);
  CHECK(!lck.form.is_zero());
}
