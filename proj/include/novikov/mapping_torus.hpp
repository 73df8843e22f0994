#pragma once

#include "novikov/exact/algebraic.hpp"
#include "novikov/exact/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace novikov {

/// One entry of an eigenvalue list: a real algebraic eigenvalue, or an
/// opaque block of non-real eigenvalues that never matches a real λ.
struct EigenSpec {
  enum class Kind { Real, ConjugatePair };
  Kind kind = Kind::Real;
  std::optional<AlgebraicReal> value;  // set iff kind == Real
  int multiplicity = 1;                // eigenvalue count; even for pairs

  static EigenSpec real(const AlgebraicReal& v, int mult = 1) { return {Kind::Real, v, mult}; }
  static EigenSpec conjugate_pair(int count) { return {Kind::ConjugatePair, std::nullopt, count}; }
};

/// Cohomology of the fiber F together with the monodromy action Φ_k on each
/// H^k(F), in one of three encodings.
class FiberModel {
 public:
  enum class Mode { TorusMonodromy, ExplicitActions, EigenDescriptor };

  /// Φ₁ acts on H¹(Tⁿ) in the coordinate coframe basis; Φ_k = Λ^k Φ₁.
  /// Requires an integer matrix with |det| = 1 and n <= 6.
  static FiberModel torus_monodromy(const Matrix<Rat>& phi1);
  /// Φ_k for k = 0..n. Φ₀ must be [1] and Φ_n = [±1].
  static FiberModel explicit_actions(const std::vector<Matrix<Rat>>& actions);
  /// Per-degree eigenvalue lists; multiplicities must sum to dims[k].
  static FiberModel eigen_descriptor(const std::vector<int>& dims, const std::vector<std::vector<EigenSpec>>& eigen);

  Mode mode() const { return mode_; }
  int dim_fiber() const { return static_cast<int>(dims_.size()) - 1; }
  const std::vector<int>& fiber_betti() const { return dims_; }
  /// Φ_k; throws for the eigen-descriptor mode.
  const Matrix<Rat>& action(int k) const;
  const std::vector<std::vector<EigenSpec>>& eigenvalues() const { return eigen_; }
  /// The stored Φ₁ in torus mode.
  const Matrix<Rat>& monodromy() const { return monodromy_; }

 private:
  Mode mode_ = Mode::ExplicitActions;
  std::vector<int> dims_;
  Matrix<Rat> monodromy_;
  std::vector<Matrix<Rat>> actions_;
  std::vector<std::vector<EigenSpec>> eigen_;
};

/// Twisted Betti numbers b_0..b_{n+1} of the total space at Lee parameter λ.
struct BettiProfile {
  AlgebraicReal lambda;
  std::vector<int> betti;
};

/// κ_k(λ) = dim ker(λ·Φ_k − I). Throws std::out_of_range for a bad degree.
int kappa(const FiberModel& model, const AlgebraicReal& lambda, int k);

/// b_k = κ_k + κ_{k−1} with κ_{−1} = 0 and b_{n+1} = κ_n. Throws
/// std::invalid_argument("Lee parameter must be positive") for λ <= 0.
BettiProfile twisted_betti(const FiberModel& model, const AlgebraicReal& lambda);

/// Positive λ with nonzero profile: reciprocals of the positive real
/// eigenvalues of every Φ_k, sorted and deduplicated.
std::vector<AlgebraicReal> exceptional_lambdas(const FiberModel& model);

/// Adds n to b₂ of a four-dimensional profile.
BettiProfile blow_up(const BettiProfile& p, int n);

long euler_char(const BettiProfile& p);

/// Eigen-descriptor model carrying the exact eigenvalue data of a
/// matrix-based model (non-real eigenvalues become conjugate-pair blocks).
FiberModel to_eigen_descriptor(const FiberModel& model);

bool operator==(const BettiProfile& a, const BettiProfile& b);

std::string format_betti(const std::vector<int>& betti);

}  // namespace novikov
