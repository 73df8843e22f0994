#pragma once

#include "novikov/exact/ratfunc.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace novikov {

/// Left-invariant form: coefficients on the lexicographic wedge basis
/// e^I, I a sorted index subset. Length C(dim, degree).
struct InvariantForm {
  int degree = 0;
  std::vector<RatFunc> coeffs;

  static InvariantForm zero(int dim, int degree);
  bool is_zero() const;
  friend InvariantForm operator+(const InvariantForm& a, const InvariantForm& b);
  friend InvariantForm operator-(const InvariantForm& a, const InvariantForm& b);
  friend InvariantForm operator*(const RatFunc& s, const InvariantForm& a);
  friend bool operator==(const InvariantForm& a, const InvariantForm& b);
};

/// Lie algebra over Q(params) with basis e_1..e_n, structure constants
/// [e_i, e_j] = Σ_k c^k_ij e_k, a Lee covector θ, an optional endomorphism J
/// (column j holds J e_j) and an optional orthonormal-coframe flag.
class LieAlgebraModel {
 public:
  LieAlgebraModel() = default;
  explicit LieAlgebraModel(int dim);

  int dim() const { return dim_; }
  std::vector<std::string> params;
  std::vector<std::string> basis_names;  // e.g. A, X, Y1, Y2
  std::vector<std::string> dual_names;   // e.g. vartheta, x, y1, y2
  std::vector<RatFunc> theta;            // θ(e_i)
  std::optional<Matrix<RatFunc>> J;
  bool coframe_metric = false;
  std::map<std::string, InvariantForm> named_forms;

  /// Sets [e_i, e_j] (0-based) and, by antisymmetry, [e_j, e_i].
  void set_bracket(int i, int j, const std::vector<RatFunc>& value);
  const std::vector<RatFunc>& bracket(int i, int j) const;
  /// Bracket of two vectors given by coefficients.
  std::vector<RatFunc> bracket(const std::vector<RatFunc>& x, const std::vector<RatFunc>& y) const;
  std::vector<RatFunc> apply_J(const std::vector<RatFunc>& x) const;
  /// Index of a dual or basis name, -1 when unknown.
  int index_of(const std::string& name) const;

 private:
  int dim_ = 0;
  std::vector<std::vector<std::vector<RatFunc>>> c_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Jacobi identity, d∘d = 0 on 1-forms, dθ = 0, J² = −I and even dimension
/// when J is present, and parameters declared. Violations name the offending
/// 1-based index triple.
ValidationReport validate(const LieAlgebraModel& m);

// Wedge basis helpers (lexicographic subsets encoded as bitmasks).
std::vector<unsigned> wedge_basis(int dim, int degree);
/// Position of a subset mask within the basis of its degree.
int wedge_index(int dim, unsigned mask);
/// Form e^{i1}∧...∧e^{ik} from a list of 0-based indices (any order).
InvariantForm basis_form(int dim, const std::vector<int>& indices);
InvariantForm one_form(const std::vector<RatFunc>& coeffs);
InvariantForm wedge(int dim, const InvariantForm& a, const InvariantForm& b);

/// Untwisted Chevalley-Eilenberg differential, dα(X,Y) = −α([X,Y]).
InvariantForm d_apply(const LieAlgebraModel& m, const InvariantForm& phi);
/// d_θφ = dφ − θ∧φ. A top-degree input gives the empty form of degree dim+1.
InvariantForm d_theta_apply(const LieAlgebraModel& m, const InvariantForm& phi);
/// Same with the covector −θ (or any given covector).
InvariantForm d_twisted(const LieAlgebraModel& m, const std::vector<RatFunc>& covector, const InvariantForm& phi);

/// Matrix of d_θ from degree p to p+1 in the wedge bases.
Matrix<RatFunc> d_theta_matrix(const LieAlgebraModel& m, int p);

/// dim ker(d_θ)_k − rank(d_θ)_{k−1} for k = 0..dim, ranks over Q(params).
std::vector<int> twisted_ce_cohomology(const LieAlgebraModel& m);

/// Hodge star for the orthonormal coframe: *e^I = sign(I, I^c) e^{I^c}.
InvariantForm hodge_star(const LieAlgebraModel& m, const InvariantForm& phi);
/// δ_θ = (−1)^{p+(p−1)(n−p+1)} * d_{−θ} * on p-forms; −*d_{−θ}* for even n.
InvariantForm delta_theta(const LieAlgebraModel& m, const InvariantForm& phi);
InvariantForm laplacian_theta(const LieAlgebraModel& m, const InvariantForm& phi);

/// Euclidean pairing in the orthonormal coframe.
RatFunc inner(const InvariantForm& a, const InvariantForm& b);

/// dim ker Δ_θ per degree for a parameter-free metric model; throws
/// std::logic_error if ker Δ_θ differs from ker d_θ ∩ ker δ_θ.
std::vector<int> harmonic_dims(const LieAlgebraModel& m);
/// Basis of ker Δ_θ in degree p (rational coefficients).
std::vector<InvariantForm> harmonic_basis(const LieAlgebraModel& m, int p);
/// Whether phi lies in the span of the given forms.
bool in_span(const InvariantForm& phi, const std::vector<InvariantForm>& forms);

/// Nonzero X with [X, JX] = 0, θ(X) = 0, θ(JX) = 0, or nullopt when the
/// bounded search finds none (not a proof of absence).
struct ObstructionCertificate {
  std::vector<Rat> x;
  std::string description;
};
std::optional<ObstructionCertificate> obstruction_search(const LieAlgebraModel& m, long budget = 20000);
bool verify_obstruction(const LieAlgebraModel& m, const std::vector<Rat>& x);

/// Substitute rational parameter values; the result has no parameters.
LieAlgebraModel instantiate(const LieAlgebraModel& m, const std::map<std::string, Rat>& values);

/// Value of a 2-form on two vectors.
RatFunc eval2(int dim, const InvariantForm& omega, const std::vector<RatFunc>& u, const std::vector<RatFunc>& v);

std::string to_string(const LieAlgebraModel& m, const InvariantForm& phi);

}  // namespace novikov
