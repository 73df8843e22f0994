#include "novikov/catalog.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <set>
#include <stdexcept>

namespace novikov {

namespace {

using Vec = std::vector<RatFunc>;

Vec unit(int dim, int i, const RatFunc& c = RatFunc(1)) {
  Vec v(dim, RatFunc(0));
  v[i] = c;
  return v;
}

Vec combo(int dim, std::initializer_list<std::pair<int, RatFunc>> terms) {
  Vec v(dim, RatFunc(0));
  for (const auto& [i, c] : terms) v[i] = v[i] + c;
  return v;
}

void set_column(Matrix<RatFunc>& J, int col, const Vec& v) {
  for (int i = 0; i < J.rows(); ++i) J(i, col) = v[i];
}

Matrix<RatFunc> zero_rf(int n) {
  Matrix<RatFunc> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = RatFunc(0);
  return m;
}

void require_valid(const LieAlgebraModel& m, const char* what) {
  auto rep = validate(m);
  if (!rep.ok) throw std::logic_error(std::string(what) + ": " + rep.violations.front());
}

void require_integer_square(const Matrix<Rat>& m, int n, const char* what) {
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument(std::string(what) + " has the wrong shape");
  for (const auto& v : m.entries())
    if (v.get_den() != 1) throw std::invalid_argument(std::string(what) + " must have integer entries");
}

AlgebraicReal one() { return AlgebraicReal::from_rational(1); }

// Roots of the 2×2 characteristic polynomial, largest last.
std::vector<RealRoot> real_roots_2x2(const Matrix<Rat>& N) {
  auto roots = isolate_real_roots(char_poly(N));
  if (roots.size() != 2) throw std::invalid_argument("N must have two distinct real eigenvalues");
  return roots;
}

SpmModel make_spm(const SpmDatum& d, bool plus) {
  require_integer_square(d.N, 2, "N");
  if (d.r == 0) throw std::invalid_argument("r must be nonzero");
  const Rat det = det_laplace(d.N);
  if (plus && det != 1) throw std::invalid_argument("S+ needs det N = 1, got " + det.get_str());
  if (!plus && det != -1) throw std::invalid_argument("S- needs det N = -1, got " + det.get_str());
  auto roots = real_roots_2x2(d.N);
  const AlgebraicReal alpha = roots.back().value.refined(Rat(1));
  if (compare(alpha, one()) <= 0) throw std::invalid_argument("N needs an eigenvalue alpha > 1");
  const AlgebraicReal inv = alg_reciprocal(alpha);
  std::vector<std::vector<EigenSpec>> eig(4);
  eig[0] = {EigenSpec::real(one())};
  if (plus) {
    eig[1] = {EigenSpec::real(inv), EigenSpec::real(alpha)};
    eig[2] = eig[1];
  } else {
    eig[1] = {EigenSpec::real(alg_neg(inv)), EigenSpec::real(alpha)};
    eig[2] = {EigenSpec::real(inv), EigenSpec::real(alg_neg(alpha))};
  }
  eig[3] = {EigenSpec::real(one())};
  SpmDatum datum = d;
  datum.sign = plus ? SpmDatum::Sign::Plus : SpmDatum::Sign::Minus;
  return {FiberModel::eigen_descriptor({1, 2, 2, 1}, eig), alpha, datum};
}

}  // namespace

Matrix<Rat> s0_default_matrix() { return Matrix<Rat>::from_rows({{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}); }

S0Model make_s0(const Matrix<Rat>& A) {
  require_integer_square(A, 3, "A");
  const Rat det = det_laplace(A);
  if (det != 1) throw std::invalid_argument("S0 needs det A = 1, got " + det.get_str());
  auto roots = isolate_real_roots(char_poly(A));
  if (roots.size() != 1 || roots[0].multiplicity != 1) {
    throw std::invalid_argument("A must have exactly one real eigenvalue and a complex-conjugate pair");
  }
  const AlgebraicReal alpha = roots[0].value.refined(Rat(1));
  if (compare(alpha, one()) <= 0) throw std::invalid_argument("the real eigenvalue of A must exceed 1");
  return {FiberModel::torus_monodromy(A), alpha};
}

std::map<std::string, Rat> s0_numeric_parameters(const Matrix<Rat>& A) {
  Eigen::Matrix3d M;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M(i, j) = A(i, j).get_d();
  Eigen::EigenSolver<Eigen::Matrix3d> es(M);
  double alpha = 0, arg = 0;
  for (int i = 0; i < 3; ++i) {
    auto ev = es.eigenvalues()[i];
    if (std::abs(ev.imag()) < 1e-12) alpha = ev.real();
    else if (ev.imag() > 0) arg = std::arg(ev);
  }
  if (alpha <= 1) throw std::invalid_argument("A has no real eigenvalue above 1");
  return {{"r", rat_from_double(-std::log(alpha) / 2)}, {"s", rat_from_double(arg)}};
}

SpmDatum splus_default() {
  SpmDatum d;
  d.N = Matrix<Rat>::from_rows({{2, 1}, {1, 1}});
  return d;
}

SpmDatum sminus_default() {
  SpmDatum d;
  d.N = Matrix<Rat>::from_rows({{1, 1}, {1, 0}});
  d.sign = SpmDatum::Sign::Minus;
  return d;
}

SpmModel make_splus(const SpmDatum& d) { return make_spm(d, true); }
SpmModel make_sminus(const SpmDatum& d) { return make_spm(d, false); }

FiberModel make_hopf() {
  return FiberModel::explicit_actions(
      {Matrix<Rat>::identity(1), Matrix<Rat>(0, 0), Matrix<Rat>(0, 0), Matrix<Rat>::identity(1)});
}

BettiProfile make_kato(int n, const AlgebraicReal& lambda) {
  if (n < 1) throw std::invalid_argument("Kato surfaces need n >= 1 blown-up points");
  return blow_up(twisted_betti(make_hopf(), lambda), n);
}

FiberModel torus_identity(int n) { return FiberModel::torus_monodromy(Matrix<Rat>::identity(n)); }

LieAlgebraModel s0_algebra() {
  LieAlgebraModel m(4);
  m.params = {"r", "s"};
  m.basis_names = {"A", "X", "Y1", "Y2"};
  m.dual_names = {"vartheta", "x", "y1", "y2"};
  const RatFunc r = RatFunc::var("r"), s = RatFunc::var("s");
  m.set_bracket(0, 1, unit(4, 1, RatFunc(-2) * r));
  m.set_bracket(0, 2, combo(4, {{2, r}, {3, s}}));
  m.set_bracket(0, 3, combo(4, {{2, -s}, {3, r}}));
  m.theta = unit(4, 0, RatFunc(-2) * r);
  Matrix<RatFunc> J = zero_rf(4);
  set_column(J, 0, unit(4, 1));
  set_column(J, 1, unit(4, 0, RatFunc(-1)));
  set_column(J, 2, unit(4, 3));
  set_column(J, 3, unit(4, 2, RatFunc(-1)));
  m.J = J;
  m.coframe_metric = true;  // Tricerri metric: vartheta, x, y1, y2 orthonormal
  const InvariantForm omega = RatFunc(-1) * basis_form(4, {0, 1}) - basis_form(4, {2, 3});
  m.named_forms["omega"] = omega;
  m.named_forms["theta_omega"] = wedge(4, one_form(m.theta), omega);
  require_valid(m, "s0 algebra");
  return m;
}

LieAlgebraModel splus_algebra(const std::string& a_expr) {
  LieAlgebraModel m(4);
  const RatFunc a = parse_expression(a_expr);
  {
    auto vars = a.variables();
    m.params.assign(vars.begin(), vars.end());
  }
  m.set_bracket(1, 2, unit(4, 0, RatFunc(-1)));
  m.set_bracket(1, 3, unit(4, 1, RatFunc(-1)));
  m.set_bracket(2, 3, unit(4, 2));
  m.theta = unit(4, 3);
  Matrix<RatFunc> J = zero_rf(4);
  set_column(J, 0, unit(4, 1));
  set_column(J, 1, unit(4, 0, RatFunc(-1)));
  set_column(J, 2, combo(4, {{3, 1}, {1, -a}}));
  set_column(J, 3, combo(4, {{2, -1}, {0, -a}}));
  m.J = J;
  require_valid(m, "S+ algebra");
  return m;
}

LieAlgebraModel splus_coframe_model() {
  LieAlgebraModel m(4);
  m.basis_names = {"F1", "F2", "F3", "F4"};
  m.dual_names = {"f1", "f2", "f3", "f4"};
  // Dual to df1 = f3^f1, df2 = f4^f1, df4 = f4^f3.
  m.set_bracket(0, 2, unit(4, 0));
  m.set_bracket(0, 3, unit(4, 1));
  m.set_bracket(2, 3, unit(4, 3));
  m.theta = unit(4, 2);
  Matrix<RatFunc> J = zero_rf(4);
  set_column(J, 0, unit(4, 1, RatFunc(-1)));
  set_column(J, 1, unit(4, 0));
  set_column(J, 2, unit(4, 3, RatFunc(-1)));
  set_column(J, 3, unit(4, 2));
  m.J = J;
  m.coframe_metric = true;
  const InvariantForm f12 = basis_form(4, {0, 1}), f34 = basis_form(4, {2, 3});
  const InvariantForm omega = RatFunc(2) * (f12 + f34);
  m.named_forms["zeta"] = basis_form(4, {0});
  m.named_forms["tau"] = basis_form(4, {2, 0});
  m.named_forms["h"] = RatFunc(2) * f12;
  m.named_forms["omega"] = omega;
  m.named_forms["theta_omega"] = wedge(4, one_form(m.theta), omega);
  m.named_forms["f4"] = basis_form(4, {3});
  require_valid(m, "S+ coframe model");
  return m;
}

std::string sminus_note() {
  return "S- is double covered by S+ with the same invariant forms; use splus_algebra for "
         "its Lie model and make_sminus for its fiber model.";
}

LieAlgebraModel ot_algebra(int s, const std::vector<std::string>& alphas) {
  if (s < 1) throw std::invalid_argument("OT algebra needs s >= 1");
  if (!alphas.empty() && static_cast<int>(alphas.size()) != s) {
    throw std::invalid_argument("OT algebra needs exactly s alpha values");
  }
  const int n = 2 * s + 2, c1 = 2 * s, c2 = 2 * s + 1;
  LieAlgebraModel m(n);
  m.basis_names.clear();
  m.dual_names.clear();
  for (int i = 1; i <= s; ++i) {
    m.basis_names.push_back("A" + std::to_string(i));
    m.dual_names.push_back("a" + std::to_string(i));
  }
  for (int i = 1; i <= s; ++i) {
    m.basis_names.push_back("B" + std::to_string(i));
    m.dual_names.push_back("b" + std::to_string(i));
  }
  m.basis_names.insert(m.basis_names.end(), {"C1", "C2"});
  m.dual_names.insert(m.dual_names.end(), {"c1", "c2"});
  std::set<std::string> params;
  m.theta.assign(n, RatFunc(0));
  Matrix<RatFunc> J = zero_rf(n);
  const RatFunc half = RatFunc(Rat(1, 2));
  for (int i = 0; i < s; ++i) {
    const std::string idx = std::to_string(i + 1);
    const RatFunc al = alphas.empty() ? RatFunc::var("alpha" + idx) : parse_expression(alphas[i]);
    for (const auto& v : al.variables()) params.insert(v);
    const int A = i, B = s + i;
    m.set_bracket(A, B, unit(n, B));
    m.set_bracket(A, c1, combo(n, {{c1, -half}, {c2, al}}));
    m.set_bracket(A, c2, combo(n, {{c1, -al}, {c2, -half}}));
    m.theta[A] = RatFunc::var("r" + idx);
    params.insert("r" + idx);
    set_column(J, A, unit(n, B));
    set_column(J, B, unit(n, A, RatFunc(-1)));
  }
  set_column(J, c1, unit(n, c2));
  set_column(J, c2, unit(n, c1, RatFunc(-1)));
  m.J = J;
  m.params.assign(params.begin(), params.end());
  require_valid(m, "OT algebra");
  return m;
}

LieAlgebraModel abelian4() {
  LieAlgebraModel m(4);
  m.theta.assign(4, RatFunc(0));
  Matrix<RatFunc> J = zero_rf(4);
  set_column(J, 0, unit(4, 1));
  set_column(J, 1, unit(4, 0, RatFunc(-1)));
  set_column(J, 2, unit(4, 3));
  set_column(J, 3, unit(4, 2, RatFunc(-1)));
  m.J = J;
  m.coframe_metric = true;
  require_valid(m, "abelian algebra");
  return m;
}

}  // namespace novikov
