#pragma once

#include "novikov/json_io.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace novikov {

/// A model addressed by catalog name or file.
struct ResolvedModel {
  std::string name;
  std::optional<FiberModel> fiber;
  int blowups = 0;  // Kato surfaces: Hopf fiber plus n blown-up points
  std::optional<AlgebraicReal> alpha;
  std::optional<LieAlgebraModel> algebra;
  /// Float-derived parameter values for the cone (S0 algebra only).
  std::optional<std::map<std::string, Rat>> numeric_params;
};

/// Names: s0:default, s0:<9 ints>, splus:default, splus:<n11,n12,n21,n22,p,q,r>,
/// sminus:..., hopf, kato:<n>, torus:<n>, ot:<s>, s0-algebra, splus-algebra,
/// splus-coframe, abelian4, or a path to a model file.
ResolvedModel resolve_model(const std::string& name);

/// Names run by `verify --all-catalog`.
std::vector<std::string> catalog_names();

/// Invariant suite for one model: {"model", "ok", "checks": [...]}.
json verify_model(const ResolvedModel& m);

/// Entry point behind the novikov executable. Exit codes: 0 success,
/// 2 usage or parse error, 3 model validation failure, 4 verification failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace novikov
