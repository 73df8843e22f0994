#include "novikov/lck_cone.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>

namespace novikov {

namespace {

Rat constant(const RatFunc& f) {
  if (!f.is_constant()) throw std::invalid_argument("instantiate parameters before cone computations");
  return f.constant_value();
}

Matrix<Rat> constant_matrix(const Matrix<RatFunc>& m) { return m.map([](const RatFunc& f) { return constant(f); }); }

Matrix<Rat> require_J(const LieAlgebraModel& m) {
  if (!m.J) throw std::invalid_argument("model has no almost-complex structure J");
  return constant_matrix(*m.J);
}

// Antisymmetric matrix W with ω(x, y) = xᵀ W y.
template <typename T, typename F>
Matrix<T> two_form_matrix(int n, const std::vector<unsigned>& basis, F coeff) {
  Matrix<T> W(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) W(i, j) = T(0);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    int i = -1, j = -1;
    for (int b = 0; b < n; ++b)
      if (basis[t] >> b & 1u) (i < 0 ? i : j) = b;
    W(i, j) = coeff(t);
    W(j, i) = -coeff(t);
  }
  return W;
}

Eigen::MatrixXd to_eigen(const Matrix<Rat>& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

// S = ½(JᵀW + WᵀJ) as a dense double matrix.
Eigen::MatrixXd sym_metric(const Eigen::MatrixXd& W, const Eigen::MatrixXd& J) {
  Eigen::MatrixXd A = J.transpose() * W;
  return 0.5 * (A + A.transpose());
}

double lambda_min(const Eigen::MatrixXd& S, Eigen::VectorXd* vec = nullptr) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
  if (vec) *vec = es.eigenvectors().col(0);
  return es.eigenvalues()(0);
}

Eigen::MatrixXd form_matrix(int n, const std::vector<unsigned>& basis, const Eigen::VectorXd& coeffs) {
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    int i = -1, j = -1;
    for (int b = 0; b < n; ++b)
      if (basis[t] >> b & 1u) (i < 0 ? i : j) = b;
    W(i, j) = coeffs(t);
    W(j, i) = -coeffs(t);
  }
  return W;
}

InvariantForm form_from(int degree, const std::vector<Rat>& v) {
  InvariantForm f;
  f.degree = degree;
  for (const auto& x : v) f.coeffs.emplace_back(x);
  return f;
}

std::vector<InvariantForm> kernel_forms(const Matrix<Rat>& A) {
  std::vector<InvariantForm> out;
  for (const auto& v : kernel_rat(A)) out.push_back(form_from(2, v));
  return out;
}

double unit_lambda(const InvariantForm& omega, const Eigen::MatrixXd& J, int n) {
  const auto basis = wedge_basis(n, 2);
  Eigen::VectorXd c(basis.size());
  for (std::size_t t = 0; t < basis.size(); ++t) c(t) = constant(omega.coeffs[t]).get_d();
  const double norm = c.norm();
  if (norm == 0) return 0;
  return lambda_min(sym_metric(form_matrix(n, basis, c / norm), J));
}

}  // namespace

std::string to_string(TamingKind k) { return k == TamingKind::Lck ? "lck" : "taming"; }

ConeOptions ConeOptions::from_environment() {
  ConeOptions o;
  if (const char* s = std::getenv("NOVIKOV_SEED")) o.seed = std::strtoull(s, nullptr, 10);
  return o;
}

std::vector<InvariantForm> kernel_basis(const LieAlgebraModel& m) {
  if (m.dim() < 2) return {};
  return kernel_forms(constant_matrix(d_theta_matrix(m, 2)));
}

std::vector<InvariantForm> lck_kernel_basis(const LieAlgebraModel& m) {
  const int n = m.dim();
  const Matrix<Rat> J = require_J(m);
  const Matrix<Rat> D = constant_matrix(d_theta_matrix(m, 2));
  const auto basis = wedge_basis(n, 2);
  const int cols = static_cast<int>(basis.size());
  // Rows of J-invariance: (JᵀWJ − W)_{ij} = 0 for i < j.
  Matrix<Rat> A(D.rows() + cols, cols);
  for (int i = 0; i < D.rows(); ++i)
    for (int j = 0; j < cols; ++j) A(i, j) = D(i, j);
  for (int c = 0; c < cols; ++c) {
    auto W = two_form_matrix<Rat>(n, basis, [&](std::size_t t) { return Rat(static_cast<int>(t) == c ? 1 : 0); });
    Matrix<Rat> diff = J.transpose() * W * J - W;
    for (int t = 0; t < cols; ++t) {
      int i = -1, j = -1;
      for (int b = 0; b < n; ++b)
        if (basis[t] >> b & 1u) (i < 0 ? i : j) = b;
      A(D.rows() + t, c) = diff(i, j);
    }
  }
  return kernel_forms(A);
}

double positivity_check(const InvariantForm& omega, const Matrix<Rat>& J) {
  const int n = J.rows();
  if (omega.degree != 2) throw std::invalid_argument("positivity needs a 2-form");
  const auto basis = wedge_basis(n, 2);
  Eigen::VectorXd c(basis.size());
  for (std::size_t t = 0; t < basis.size(); ++t) c(t) = constant(omega.coeffs[t]).get_d();
  return lambda_min(sym_metric(form_matrix(n, basis, c), to_eigen(J)));
}

TamingCertificate taming_feasibility(const LieAlgebraModel& m, TamingKind kind, const ConeOptions& opt) {
  const int n = m.dim();
  const Eigen::MatrixXd J = to_eigen(require_J(m));
  TamingCertificate cert;
  cert.kind = kind;
  cert.form = InvariantForm::zero(n, 2);
  const auto kernel = kind == TamingKind::Lck ? lck_kernel_basis(m) : kernel_basis(m);
  if (kernel.empty()) {
    cert.reason = "kernel is zero";
    return cert;
  }
  const auto basis = wedge_basis(n, 2);
  const int N = static_cast<int>(basis.size()), K = static_cast<int>(kernel.size());
  Eigen::MatrixXd Kmat(N, K);
  for (int j = 0; j < K; ++j)
    for (int t = 0; t < N; ++t) Kmat(t, j) = constant(kernel[j].coeffs[t]).get_d();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(Kmat);
  const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(N, K);
  std::vector<Eigen::MatrixXd> S(K);
  for (int i = 0; i < K; ++i) S[i] = sym_metric(form_matrix(n, basis, Q.col(i)), J);

  auto metric = [&](const Eigen::VectorXd& c) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < K; ++i) M += c(i) * S[i];
    return M;
  };

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd best_c;
  double best = -std::numeric_limits<double>::infinity();
  for (int r = 0; r < opt.restarts; ++r) {
    Eigen::VectorXd c(K);
    for (int i = 0; i < K; ++i) c(i) = gauss(rng);
    c.normalize();
    double local = -std::numeric_limits<double>::infinity();
    int stale = 0;
    for (int k = 1; k <= opt.max_iterations && stale < 400; ++k) {
      Eigen::VectorXd v;
      const double lm = lambda_min(metric(c), &v);
      if (lm > local + 1e-13) {
        local = lm;
        stale = 0;
      } else {
        ++stale;
      }
      if (lm > best) {
        best = lm;
        best_c = c;
      }
      Eigen::VectorXd g(K);
      for (int i = 0; i < K; ++i) g(i) = v.dot(S[i] * v);
      Eigen::VectorXd next = c + g / static_cast<double>(k);
      // A step through the origin would leave the sphere; shorten it.
      if (next.norm() < 1e-9) next = c + g / (2.0 * k);
      c = next.normalized();
    }
    ++cert.restarts_run;
  }
  cert.coefficients.assign(best_c.data(), best_c.data() + K);
  // Exact reconstruction: solve K y = Q c, rationalize y.
  const Eigen::VectorXd y = Kmat.colPivHouseholderQr().solve(Q * best_c);
  InvariantForm exact = InvariantForm::zero(n, 2);
  for (int j = 0; j < K; ++j) exact = exact + RatFunc(rat_from_double(y(j))) * kernel[j];
  cert.form = exact;
  cert.lambda_min = unit_lambda(exact, J, n);
  cert.feasible = cert.lambda_min > opt.tolerance;
  if (!cert.feasible) cert.reason = "no positive form found (numerical evidence, not proof)";
  return cert;
}

bool recheck_certificate(const LieAlgebraModel& m, const TamingCertificate& c) {
  if (!d_theta_apply(m, c.form).is_zero()) return false;
  const int n = m.dim();
  if (c.kind == TamingKind::Lck) {
    const Matrix<Rat> J = require_J(m);
    const auto basis = wedge_basis(n, 2);
    auto W = two_form_matrix<Rat>(n, basis, [&](std::size_t t) { return constant(c.form.coeffs[t]); });
    if (!(J.transpose() * W * J == W)) return false;
  }
  const double lm = unit_lambda(c.form, to_eigen(require_J(m)), n);
  if (std::abs(lm - c.lambda_min) > 1e-9) return false;
  return !c.feasible || lm > 1e-8;
}

}  // namespace novikov
