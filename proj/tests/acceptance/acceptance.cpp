// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "novikov/catalog.hpp"
#include "novikov/exact/factor.hpp"
#include "novikov/exact/number_field.hpp"
#include "novikov/lck_cone.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace novikov;

namespace {

using Profile = std::vector<int>;

AlgebraicReal q(long p, long d = 1) { return AlgebraicReal::from_rational(make_rat(p, d)); }

Profile rev(Profile v) {
  std::reverse(v.begin(), v.end());
  return v;
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Matrix<Rat> rat_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rat>> r;
  for (const auto& row : rows) {
    std::vector<Rat> v;
    for (long x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return Matrix<Rat>::from_rows(r);
}

// Collects the first few mismatches of one criterion.
struct Check {
  bool ok = true;
  std::ostringstream why;
  int noted = 0;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (noted++ < 3) why << (noted > 1 ? "; " : "") << what;
  }
};

std::string show(const Profile& b) { return format_betti(b); }

// Positive algebraic λ: rationals alternating with square roots and a cubic root.
std::vector<AlgebraicReal> random_lambdas(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<AlgebraicReal> out;
  while (static_cast<int>(out.size()) < count) {
    switch (out.size() % 3) {
      case 0:
        out.push_back(q(1 + rng() % 40, 1 + rng() % 17));
        break;
      case 1: {
        long m = 2 + rng() % 30;
        auto roots = isolate_real_roots(IntPoly(std::vector<Int>{Int(-m), Int(0), Int(1)}));
        if (roots.back().value.degree() == 2) out.push_back(roots.back().value);
        break;
      }
      default: {
        long c = 1 + rng() % 5;
        auto roots = isolate_real_roots(IntPoly(std::vector<Int>{Int(-c), Int(-1), Int(0), Int(1)}));
        for (const auto& r : roots)
          if (r.value.sign() > 0 && r.value.degree() == 3) {
            out.push_back(r.value);
            break;
          }
        break;
      }
    }
  }
  return out;
}

struct NamedFiber {
  std::string name;
  FiberModel fiber;
};

std::vector<NamedFiber> catalog_fibers() {
  SpmDatum second = splus_default();
  second.N = rat_matrix({{3, 1}, {2, 1}});
  return {{"s0", make_s0(s0_default_matrix()).fiber},
          {"splus", make_splus(splus_default()).fiber},
          {"splus[3,1;2,1]", make_splus(second).fiber},
          {"sminus", make_sminus(sminus_default()).fiber},
          {"hopf", make_hopf()},
          {"torus1", torus_identity(1)},
          {"torus2", torus_identity(2)},
          {"torus3", torus_identity(3)}};
}

void criterion1(Check& c) {
  auto s0 = make_s0(s0_default_matrix());
  auto at = twisted_betti(s0.fiber, s0.alpha).betti;
  c.expect(at == Profile{0, 0, 1, 1, 0}, "at alpha " + show(at));
  auto inv = twisted_betti(s0.fiber, alg_reciprocal(s0.alpha)).betti;
  c.expect(inv == Profile{0, 1, 1, 0, 0}, "at 1/alpha " + show(inv));
  std::mt19937 rng(17);
  int done = 0;
  while (done < 5) {
    auto l = q(1 + rng() % 50, 1 + rng() % 23);
    if (alg_eq(l, q(1))) continue;
    auto b = twisted_betti(s0.fiber, l).betti;
    c.expect(b == Profile{0, 0, 0, 0, 0}, "at " + to_string(l) + " " + show(b));
    ++done;
  }
}

void criterion2(Check& c) {
  SpmDatum second = splus_default();
  second.N = rat_matrix({{3, 1}, {2, 1}});
  for (const auto& d : {splus_default(), second}) {
    auto m = make_splus(d);
    auto b = twisted_betti(m.fiber, m.alpha).betti;
    c.expect(b == Profile{0, 1, 2, 1, 0}, "N with alpha " + to_string(m.alpha) + " gives " + show(b));
  }
}

void criterion3(Check& c) {
  auto m = make_sminus(sminus_default());
  auto b = twisted_betti(m.fiber, m.alpha).betti;
  c.expect(b == Profile{0, 0, 1, 1, 0}, "at alpha " + show(b));
  auto r = twisted_betti(m.fiber, alg_reciprocal(m.alpha)).betti;
  c.expect(r == rev(b), "at 1/alpha " + show(r));
}

void criterion4(Check& c) {
  auto hopf = make_hopf();
  for (const auto& l : random_lambdas(9, 4)) {
    if (alg_eq(l, q(1))) continue;
    auto b = twisted_betti(hopf, l).betti;
    c.expect(b == Profile{0, 0, 0, 0, 0}, "hopf at " + to_string(l) + " " + show(b));
  }
  for (int n : {1, 5, 7}) {
    auto b = make_kato(n, q(3)).betti;
    c.expect(b.size() == 5 && b[2] == n, "kato(" + std::to_string(n) + ") " + show(b));
  }
}

void criterion5(Check& c) {
  auto lambdas = random_lambdas(20, 2024);
  for (const auto& [name, f] : catalog_fibers()) {
    auto pts = lambdas;
    for (const auto& e : exceptional_lambdas(f)) pts.push_back(e);
    for (const auto& l : pts) {
      auto b = twisted_betti(f, l).betti;
      auto r = twisted_betti(f, alg_reciprocal(l)).betti;
      c.expect(rev(b) == r, name + " at " + to_string(l));
    }
  }
  for (int n : {1, 5, 7})
    for (const auto& l : lambdas) c.expect(rev(make_kato(n, l).betti) == make_kato(n, alg_reciprocal(l)).betti, "kato");
}

void criterion6(Check& c) {
  auto lambdas = random_lambdas(12, 99);
  lambdas.push_back(q(1));
  for (const auto& [name, f] : catalog_fibers()) {
    auto pts = lambdas;
    for (const auto& e : exceptional_lambdas(f)) pts.push_back(e);
    for (const auto& l : pts) c.expect(euler_char(twisted_betti(f, l)) == 0, name + " at " + to_string(l));
  }
  for (int n : {1, 5, 7})
    for (const auto& l : lambdas) c.expect(euler_char(make_kato(n, l)) == n, "kato(" + std::to_string(n) + ")");
}

void criterion7(Check& c) {
  auto s0 = make_s0(s0_default_matrix());
  auto b = twisted_betti(s0.fiber, q(1)).betti;
  c.expect(b == Profile{1, 1, 0, 1, 1}, "s0 " + show(b));
  for (int n = 1; n <= 5; ++n) {
    auto t = twisted_betti(torus_identity(n), q(1)).betti;
    Profile want;
    for (int k = 0; k <= n + 1; ++k) want.push_back(static_cast<int>(binom(n + 1, k)));
    c.expect(t == want, "T^" + std::to_string(n) + " " + show(t));
  }
}

void criterion8(Check& c) {
  auto m = splus_algebra();
  c.expect(m.theta == std::vector<RatFunc>{RatFunc(0), RatFunc(0), RatFunc(0), RatFunc(1)}, "theta is not e^4");
  auto h = twisted_ce_cohomology(m);
  c.expect(h == Profile{0, 1, 2, 1, 0}, "symbolic a " + show(h));
  for (const char* a : {"0", "1/2", "-3"}) {
    auto ha = twisted_ce_cohomology(splus_algebra(a));
    c.expect(ha == Profile{0, 1, 2, 1, 0}, std::string("a = ") + a + " " + show(ha));
  }
}

void criterion9(Check& c) {
  auto m = splus_coframe_model();
  const auto& zeta = m.named_forms.at("zeta");
  const auto& h = m.named_forms.at("h");
  const auto& tau = m.named_forms.at("tau");
  const auto& omega = m.named_forms.at("omega");
  const auto& to = m.named_forms.at("theta_omega");
  c.expect(d_theta_apply(m, zeta).is_zero(), "d_theta zeta");
  c.expect(delta_theta(m, zeta).is_zero(), "delta_theta zeta");
  c.expect(laplacian_theta(m, h).is_zero(), "Laplacian h");
  c.expect(laplacian_theta(m, tau).is_zero(), "Laplacian tau");
  c.expect(laplacian_theta(m, to).is_zero(), "Laplacian theta^omega");
  c.expect(omega == d_theta_apply(m, RatFunc(-1) * m.named_forms.at("f4")) + h, "omega = d_theta(-f4) + h");
}

void criterion10(Check& c) {
  auto s0 = s0_algebra();
  c.expect(d_theta_apply(s0, s0.named_forms.at("omega")).is_zero(), "s0 omega");
  auto sp = splus_coframe_model();
  c.expect(d_theta_apply(sp, sp.named_forms.at("omega")).is_zero(), "splus omega");
}

void criterion11(Check& c) {
  std::vector<std::pair<std::string, LieAlgebraModel>> models = {
      {"s0", s0_algebra()}, {"splus/sminus", splus_algebra()}, {"ot1", ot_algebra(1)}, {"ot2", ot_algebra(2)}};
  for (const auto& [name, m] : models) {
    auto cert = obstruction_search(m);
    c.expect(cert.has_value(), name + ": no certificate");
    if (cert) c.expect(verify_obstruction(m, cert->x), name + ": certificate fails verification");
  }
}

void criterion12(Check& c) {
  ConeOptions opt;  // fixed default seed, 64 restarts
  auto at = instantiate(s0_algebra(), s0_numeric_parameters(s0_default_matrix()));
  auto lck = taming_feasibility(at, TamingKind::Lck, opt);
  c.expect(lck.feasible && lck.lambda_min > 0.05, "lck at alpha lambda_min " + std::to_string(lck.lambda_min));
  c.expect(recheck_certificate(at, lck), "lck certificate recheck");
  auto inv = at;
  for (auto& t : inv.theta) t = -t;
  auto tame = taming_feasibility(inv, TamingKind::Taming, opt);
  c.expect(!tame.feasible && tame.lambda_min <= 1e-6, "taming at 1/alpha best " + std::to_string(tame.lambda_min));
  c.expect(tame.restarts_run == 64, "restarts " + std::to_string(tame.restarts_run));
}

Matrix<Rat> random_matrix(std::mt19937_64& rng, int n, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  Matrix<Rat> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

Matrix<Rat> inverse(const Matrix<Rat>& m) {
  const int n = m.rows();
  Matrix<Rat> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  rref(aug);
  Matrix<Rat> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Distinct real roots of a square-free polynomial from companion eigenvalues.
int float_real_roots(const IntPoly& p) {
  const int n = p.degree();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  const double lc = p.lc().get_d();
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -p.coeff(i).get_d() / lc;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
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

void criterion13(Check& c) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + trial % 4;
    auto a = random_matrix(rng, n, 5), b = random_matrix(rng, n, 5);
    for (int k = 0; k <= n; ++k)
      c.expect(exterior_power(a * b, k) == exterior_power(a, k) * exterior_power(b, k), "functoriality");
  }
  for (int done = 0; done < 30;) {
    auto a = random_matrix(rng, 3, 6);
    Rat det = det_laplace(a);
    if (det == 0) continue;
    c.expect(wedge2_cyclic(a) == det * inverse(a).transpose(), "cofactor identity");
    ++done;
  }

  std::uniform_int_distribution<long> coef(-6, 6);
  for (int checked = 0; checked < 100;) {
    int d = 1 + static_cast<int>(rng() % 6);
    std::vector<Int> cs;
    for (int k = 0; k < d; ++k) cs.emplace_back(coef(rng));
    long lead = coef(rng);
    cs.emplace_back(lead == 0 ? 1 : lead);
    IntPoly p(cs);
    RatPoly f = to_rat_poly(p);
    IntPoly sf = primitive_part(divmod(f, gcd(f, f.derivative())).first);
    c.expect(count_real_roots(p) == float_real_roots(sf), "Sturm count vs float oracle for " + to_string(p));
    auto roots = isolate_real_roots(p);
    for (const auto& r : roots) {
      double v = r.value.refined(make_rat(1, 1000000000000L)).approx();
      const IntPoly& mp = r.value.minpoly();
      double scale = 0, res = 0;
      for (int k = mp.degree(); k >= 0; --k) {
        scale = scale * std::abs(v) + std::abs(mp.coeff(k).get_d());
        res = res * v + mp.coeff(k).get_d();
      }
      c.expect(std::abs(res) <= 1e-9 * std::max(1.0, scale), "isolated root residual for " + to_string(p));
    }
    ++checked;
  }

  AlgebraicReal rho(IntPoly(std::vector<Int>{-1, -1, 0, 1}), Rat(1), Rat(2));
  NumberField K(rho);
  std::uniform_int_distribution<long> small(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    int rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    Matrix<NFElem> m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        m(i, j) = K.from_poly(RatPoly(std::vector<Rat>{Rat(small(rng)), Rat(small(rng)), Rat(small(rng) % 2)}));
    if (trial % 2 == 0 && rows > 1)
      for (int j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * (K.gen() - NFElem(1));
    Eigen::MatrixXd fm(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) fm(i, j) = K.approx(m(i, j));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(fm);
    int frank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()[i] > 1e-9) ++frank;
    c.expect(nf_rank(m) == frank, "nf_rank vs float rank");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"S0 golden profiles", criterion1},
      {"S+ golden profile for two N", criterion2},
      {"S- golden profile and its reverse", criterion3},
      {"Hopf zero profile and Kato b2 = n", criterion4},
      {"Poincare duality on catalog fibers", criterion5},
      {"Euler characteristic invariance", criterion6},
      {"de Rham recovery at lambda = 1", criterion7},
      {"S+ algebra twisted CE cohomology", criterion8},
      {"S+ coframe harmonicity suite", criterion9},
      {"Tricerri forms are d_theta-closed", criterion10},
      {"obstruction certificates verified", criterion11},
      {"cone feasibility on the S0 algebra", criterion12},
      {"exact-algebra properties", criterion13},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.why << (c.noted ? "; " : "") << "exception: " << e.what();
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
    if (i + 1 == 12) std::cout << " (infeasible side is numerical evidence)";
    if (!c.ok) std::cout << " -- " << c.why.str();
    std::cout << "\n";
    if (!c.ok) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
