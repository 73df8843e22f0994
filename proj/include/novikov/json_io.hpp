#pragma once

#include "novikov/chevalley_eilenberg.hpp"
#include "novikov/lck_cone.hpp"
#include "novikov/mapping_torus.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace novikov {

using nlohmann::json;

/// Malformed input (bad λ string, schema violation). CLI exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Well-formed input describing an invalid model. CLI exit code 3.
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "rational:p/q" or "poly:c0,c1,...,cd@(lo,hi)" (ascending coefficients;
/// the polynomial may be reducible as long as exactly one real root lies in
/// the open interval).
AlgebraicReal parse_lambda_spec(const std::string& spec);
/// Eigenvalue list entry: a λ string or "conjugate_pair:<count>".
EigenSpec parse_eigen_spec(const std::string& spec, int multiplicity = 1);

json algebraic_to_json(const AlgebraicReal& a);
AlgebraicReal algebraic_from_json(const json& j);

json profile_to_json(const BettiProfile& p);
BettiProfile profile_from_json(const json& j);

/// Form keys are 1-based comma-joined index lists, values rational strings
/// (or expressions for symbolic forms).
json form_to_json(int dim, const InvariantForm& f);
InvariantForm form_from_json(int dim, const json& j);

json certificate_to_json(int dim, const TamingCertificate& c);
TamingCertificate certificate_from_json(const json& j);
bool operator==(const TamingCertificate& a, const TamingCertificate& b);

/// Contents of a model file.
struct ModelFile {
  std::string type;  // torus_monodromy | fiber_descriptor | lie_algebra
  std::string name;
  std::optional<FiberModel> fiber;
  std::optional<AlgebraicReal> alpha;
  std::optional<LieAlgebraModel> algebra;
};

/// Schema errors raise UsageError; validation errors raise ModelError.
ModelFile parse_model(const json& j);
ModelFile load_model_file(const std::string& path);

}  // namespace novikov
