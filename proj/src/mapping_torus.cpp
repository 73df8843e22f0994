#include "novikov/mapping_torus.hpp"

#include "novikov/exact/factor.hpp"
#include "novikov/exact/number_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace novikov {

namespace {

constexpr int kMaxFiberDim = 6;

bool is_integer_matrix(const Matrix<Rat>& m) {
  for (const auto& v : m.entries())
    if (v.get_den() != 1) return false;
  return true;
}

bool is_plus_minus_one(const Matrix<Rat>& m) {
  return m.rows() == 1 && m.cols() == 1 && abs(m(0, 0)) == 1;
}

// dim ker(λΦ − I) over Q or Q(λ).
int kernel_dim(const Matrix<Rat>& phi, const AlgebraicReal& lambda) {
  const int n = phi.rows();
  if (n == 0) return 0;
  if (lambda.is_rational()) {
    const Rat l = lambda.rational_value();
    Matrix<Rat> m = l * phi - Matrix<Rat>::identity(n);
    return n - rank_rat(m);
  }
  NumberField K(lambda);
  Matrix<NFElem> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = K.gen() * K.from_rat(phi(i, j)) - K.from_rat(i == j ? Rat(1) : Rat(0));
  return n - nf_rank(m);
}

void add_unique(std::vector<AlgebraicReal>& out, const AlgebraicReal& v) {
  for (const auto& w : out)
    if (alg_eq(w, v)) return;
  out.push_back(v);
}

}  // namespace

FiberModel FiberModel::torus_monodromy(const Matrix<Rat>& phi1) {
  if (!phi1.square() || phi1.rows() < 1) throw std::invalid_argument("monodromy must be a nonempty square matrix");
  if (phi1.rows() > kMaxFiberDim) throw std::invalid_argument("fiber dimension above the cap of 6");
  if (!is_integer_matrix(phi1)) throw std::invalid_argument("torus monodromy must have integer entries");
  if (abs(det_laplace(phi1)) != 1) throw std::invalid_argument("torus monodromy must have determinant +1 or -1");
  FiberModel f;
  f.mode_ = Mode::TorusMonodromy;
  f.monodromy_ = phi1;
  const int n = phi1.rows();
  for (int k = 0; k <= n; ++k) {
    f.actions_.push_back(exterior_power(phi1, k));
    f.dims_.push_back(f.actions_.back().rows());
  }
  return f;
}

FiberModel FiberModel::explicit_actions(const std::vector<Matrix<Rat>>& actions) {
  if (actions.size() < 2) throw std::invalid_argument("explicit actions need degrees 0..n with n >= 1");
  FiberModel f;
  f.mode_ = Mode::ExplicitActions;
  for (std::size_t k = 0; k < actions.size(); ++k) {
    if (!actions[k].square()) {
      throw std::invalid_argument("action in degree " + std::to_string(k) + " is not square");
    }
    f.dims_.push_back(actions[k].rows());
  }
  if (!(actions.front() == Matrix<Rat>::identity(1))) throw std::invalid_argument("degree-0 action must be [1]");
  if (!is_plus_minus_one(actions.back())) throw std::invalid_argument("top-degree action must be [1] or [-1]");
  f.actions_ = actions;
  return f;
}

FiberModel FiberModel::eigen_descriptor(const std::vector<int>& dims, const std::vector<std::vector<EigenSpec>>& eigen) {
  if (dims.size() < 2) throw std::invalid_argument("eigen descriptor needs degrees 0..n with n >= 1");
  if (dims.size() != eigen.size()) throw std::invalid_argument("one eigenvalue list per degree is required");
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] < 0) throw std::invalid_argument("negative fiber Betti number");
    int total = 0;
    for (const auto& e : eigen[k]) {
      if (e.multiplicity < 1) throw std::invalid_argument("eigenvalue multiplicity must be positive");
      if (e.kind == EigenSpec::Kind::ConjugatePair) {
        if (e.multiplicity % 2) throw std::invalid_argument("conjugate-pair block must have even size");
      } else {
        if (!e.value) throw std::invalid_argument("real eigenvalue without a value");
        if (e.value->sign() == 0) throw std::invalid_argument("zero eigenvalue: action must be invertible");
      }
      total += e.multiplicity;
    }
    if (total != dims[k]) {
      throw std::invalid_argument("multiplicities in degree " + std::to_string(k) + " sum to " +
                                  std::to_string(total) + ", expected " + std::to_string(dims[k]));
    }
  }
  if (dims.front() != 1) throw std::invalid_argument("fiber must be connected (dim H^0 = 1)");
  FiberModel f;
  f.mode_ = Mode::EigenDescriptor;
  f.dims_ = dims;
  f.eigen_ = eigen;
  return f;
}

const Matrix<Rat>& FiberModel::action(int k) const {
  if (mode_ == Mode::EigenDescriptor) throw std::logic_error("eigen-descriptor models carry no matrices");
  if (k < 0 || k > dim_fiber()) throw std::out_of_range("degree out of range");
  return actions_[k];
}

int kappa(const FiberModel& model, const AlgebraicReal& lambda, int k) {
  if (k < 0 || k > model.dim_fiber()) throw std::out_of_range("degree " + std::to_string(k) + " out of range");
  if (model.mode() != FiberModel::Mode::EigenDescriptor) return kernel_dim(model.action(k), lambda);
  if (lambda.sign() == 0) return 0;
  const AlgebraicReal target = alg_reciprocal(lambda);
  int total = 0;
  for (const auto& e : model.eigenvalues()[k]) {
    if (e.kind == EigenSpec::Kind::Real && alg_eq(*e.value, target)) total += e.multiplicity;
  }
  return total;
}

BettiProfile twisted_betti(const FiberModel& model, const AlgebraicReal& lambda) {
  if (lambda.sign() <= 0) throw std::invalid_argument("Lee parameter must be positive");
  const int n = model.dim_fiber();
  std::vector<int> kap(n + 1);
  for (int k = 0; k <= n; ++k) kap[k] = kappa(model, lambda, k);
  std::vector<int> b(n + 2, 0);
  for (int k = 0; k <= n + 1; ++k) {
    if (k <= n) b[k] += kap[k];
    if (k >= 1) b[k] += kap[k - 1];
  }
  return {lambda, b};
}

std::vector<AlgebraicReal> exceptional_lambdas(const FiberModel& model) {
  std::vector<AlgebraicReal> out;
  for (int k = 0; k <= model.dim_fiber(); ++k) {
    if (model.mode() == FiberModel::Mode::EigenDescriptor) {
      for (const auto& e : model.eigenvalues()[k]) {
        if (e.kind == EigenSpec::Kind::Real && e.value->sign() > 0) add_unique(out, alg_reciprocal(*e.value));
      }
    } else {
      const auto& phi = model.action(k);
      if (phi.rows() == 0) continue;
      for (const auto& r : isolate_real_roots(char_poly(phi))) {
        if (r.value.sign() > 0) add_unique(out, alg_reciprocal(r.value));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; });
  return out;
}

BettiProfile blow_up(const BettiProfile& p, int n) {
  if (p.betti.size() != 5) throw std::invalid_argument("blow-up needs the profile of a four-dimensional space");
  if (n < 0) throw std::invalid_argument("number of blown-up points must be non-negative");
  BettiProfile q = p;
  q.betti[2] += n;
  return q;
}

long euler_char(const BettiProfile& p) {
  long chi = 0;
  for (std::size_t k = 0; k < p.betti.size(); ++k) chi += (k % 2 ? -1L : 1L) * p.betti[k];
  return chi;
}

FiberModel to_eigen_descriptor(const FiberModel& model) {
  if (model.mode() == FiberModel::Mode::EigenDescriptor) return model;
  std::vector<std::vector<EigenSpec>> eigen;
  for (int k = 0; k <= model.dim_fiber(); ++k) {
    std::vector<EigenSpec> list;
    const auto& phi = model.action(k);
    if (phi.rows() > 0) {
      for (const auto& [f, mult] : factor(char_poly(phi))) {
        auto roots = isolate_real_roots(f);
        for (const auto& r : roots) {
          // Algebraic multiplicity stands in for the kernel dimension only
          // when the eigenvalue is semisimple.
          if (mult > 1 && kernel_dim(phi, alg_reciprocal(r.value)) != mult) {
            throw std::invalid_argument("action in degree " + std::to_string(k) +
                                        " is not diagonalizable; eigen-descriptor encoding would overcount");
          }
          list.push_back(EigenSpec::real(r.value, mult));
        }
        int complex_count = (f.degree() - static_cast<int>(roots.size())) * mult;
        if (complex_count > 0) list.push_back(EigenSpec::conjugate_pair(complex_count));
      }
    }
    eigen.push_back(list);
  }
  return FiberModel::eigen_descriptor(model.fiber_betti(), eigen);
}

bool operator==(const BettiProfile& a, const BettiProfile& b) {
  return a.betti == b.betti && alg_eq(a.lambda, b.lambda);
}

std::string format_betti(const std::vector<int>& betti) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < betti.size(); ++i) os << (i ? ", " : "") << betti[i];
  os << "]";
  return os.str();
}

}  // namespace novikov
