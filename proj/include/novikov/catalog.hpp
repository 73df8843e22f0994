#pragma once

#include "novikov/chevalley_eilenberg.hpp"
#include "novikov/mapping_torus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace novikov {

/// Torus-bundle model over the circle with the distinguished Lee parameter α.
struct S0Model {
  FiberModel fiber;
  AlgebraicReal alpha;
};

/// Companion matrix of x³ − x − 1, the canonical S⁰ monodromy.
Matrix<Rat> s0_default_matrix();

/// A: 3×3 integer matrix with det A = 1, one real eigenvalue α > 1 and a
/// complex-conjugate pair. Φ₁ = A acting on H¹(T³).
S0Model make_s0(const Matrix<Rat>& A);

struct SpmDatum {
  enum class Sign { Plus, Minus };
  Matrix<Rat> N;
  Sign sign = Sign::Plus;
  // Affine-group data; inert for cohomology, kept for provenance.
  long p = 0, q = 0, r = 1;
  std::optional<Rat> z_real;
};

struct SpmModel {
  FiberModel fiber;
  AlgebraicReal alpha;
  SpmDatum datum;
};

SpmDatum splus_default();   // N = [[2,1],[1,1]]
SpmDatum sminus_default();  // N = [[1,1],[1,0]]

/// Fiber dims (1,2,2,1). S⁺: Φ₁, Φ₂ have eigenvalues {1/α, α}. S⁻: Φ₁ has
/// {−1/α, α}, Φ₂ has {1/α, −α}, Φ₃ = 1.
SpmModel make_splus(const SpmDatum& d);
SpmModel make_sminus(const SpmDatum& d);

/// Fiber S³ with identity actions, dims (1,0,0,1).
FiberModel make_hopf();

/// Profile of the Hopf surface blown up at n >= 1 points.
BettiProfile make_kato(int n, const AlgebraicReal& lambda);

/// Identity monodromy on Tⁿ.
FiberModel torus_identity(int n);

/// Basis A, X, Y1, Y2 with [A,X] = −2rX, [A,Y1] = rY1 + sY2,
/// [A,Y2] = −sY1 + rY2; θ = −2rϑ; JA = X, JY1 = Y2; orthonormal coframe;
/// named forms omega = −ϑ∧x − y1∧y2 and theta_omega.
LieAlgebraModel s0_algebra();

/// Parameter values r = −ln α / 2 and s = arg β for the S⁰ monodromy (β a
/// complex eigenvalue), as exact rationals of the double approximations.
std::map<std::string, Rat> s0_numeric_parameters(const Matrix<Rat>& A);

/// [e2,e3] = −e1, [e2,e4] = −e2, [e3,e4] = e3; θ = e⁴; Je1 = e2,
/// Je3 = e4 − a·e2. `a` is an expression (default the parameter a).
LieAlgebraModel splus_algebra(const std::string& a = "a");

/// Invariant coframe f1..f4 of S⁺: df1 = f3∧f1, df2 = f4∧f1, df3 = 0,
/// df4 = f4∧f3, θ = f3, orthonormal. Named forms zeta, tau, h, omega,
/// theta_omega and f4.
LieAlgebraModel splus_coframe_model();

/// S⁻ is double covered by S⁺; its invariant model is the S⁺ algebra.
std::string sminus_note();

/// Oeljeklaus-Toma type algebra with s pairs (A_i, B_i) and C1, C2.
/// alphas empty means symbolic parameters alpha1..alphas; θ = Σ r_i a^i.
LieAlgebraModel ot_algebra(int s, const std::vector<std::string>& alphas = {});

/// Abelian R⁴, θ = 0, Je1 = e2, Je3 = e4, orthonormal coframe.
LieAlgebraModel abelian4();

}  // namespace novikov
