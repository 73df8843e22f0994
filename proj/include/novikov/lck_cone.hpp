#pragma once

#include "novikov/chevalley_eilenberg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace novikov {

enum class TamingKind { Taming, Lck };

std::string to_string(TamingKind k);

struct ConeOptions {
  int restarts = 64;
  int max_iterations = 5000;
  double tolerance = 1e-6;
  std::uint64_t seed = 20240607;
  /// Reads NOVIKOV_SEED when set.
  static ConeOptions from_environment();
};

/// Best point found by the λ_min ascent. `coefficients` are in the returned
/// orthonormalized kernel basis; `form` is the exact rational reconstruction.
struct TamingCertificate {
  TamingKind kind = TamingKind::Taming;
  bool feasible = false;
  double lambda_min = 0;
  std::vector<double> coefficients;
  InvariantForm form;
  std::string reason;  // set for the infeasible verdict
  int restarts_run = 0;
};

/// Basis of ker d_θ on invariant 2-forms (exact). The model must carry
/// rational constants only.
std::vector<InvariantForm> kernel_basis(const LieAlgebraModel& m);
/// Same, intersected with the J-invariant forms ω(J·, J·) = ω.
std::vector<InvariantForm> lck_kernel_basis(const LieAlgebraModel& m);

/// Smallest eigenvalue of S_uv = ½(ω(Je_u, e_v) + ω(Je_v, e_u)).
double positivity_check(const InvariantForm& omega, const Matrix<Rat>& J);

/// Maximizes λ_min over unit-norm forms of the kernel by projected
/// subgradient ascent with random restarts. Infeasible verdicts are
/// numerical evidence, not proof.
TamingCertificate taming_feasibility(const LieAlgebraModel& m, TamingKind kind, const ConeOptions& opt = {});

/// Exact d_θω = 0 on the stored form and a fresh float λ_min of the
/// normalized form that is positive (margin 1e-8) and agrees with the
/// stored value.
bool recheck_certificate(const LieAlgebraModel& m, const TamingCertificate& c);

}  // namespace novikov
