#include "novikov/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace novikov {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

Rat rat_or_usage(const std::string& text, const std::string& what) {
  try {
    return parse_rat(text);
  } catch (const std::exception&) {
    throw UsageError("malformed " + what + ": '" + text + "'");
  }
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// Integer or rational given as a JSON number or string.
Rat json_rat(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return rat_or_usage(j.get<std::string>(), what);
  throw UsageError(what + " must be an integer or a rational string");
}

RatFunc json_expr(const json& j, const std::string& what) {
  if (j.is_number_integer()) return RatFunc(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_expression(j.get<std::string>());
    } catch (const std::exception& e) {
      throw UsageError("bad expression in " + what + ": " + e.what());
    }
  }
  throw UsageError(what + " must be an integer or an expression string");
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw UsageError(where + " must be an object");
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) throw UsageError("unknown key '" + k + "' in " + where);
  }
}

const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw UsageError("missing key '" + key + "' in " + where);
  return j.at(key);
}

Matrix<Rat> json_matrix(const json& j, const std::string& what) {
  if (!j.is_array()) throw UsageError(what + " must be a list of rows");
  const int rows = static_cast<int>(j.size());
  int cols = rows == 0 ? 0 : -1;
  for (const auto& r : j) {
    if (!r.is_array()) throw UsageError(what + " rows must be lists");
    if (cols >= 0 && static_cast<int>(r.size()) != cols) throw UsageError(what + " rows differ in length");
    cols = static_cast<int>(r.size());
  }
  Matrix<Rat> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) m(i, k) = json_rat(j[i][k], what + " entry");
  return m;
}

// "1,2" -> {0, 1}.
std::vector<int> index_key(const std::string& key, int dim) {
  std::vector<int> idx;
  for (const auto& p : split(key, ',')) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(p, &used);
      if (used != p.size()) throw std::invalid_argument(p);
    } catch (const std::exception&) {
      throw UsageError("bad form index list '" + key + "'");
    }
    if (v < 1 || v > dim) throw UsageError("form index out of range in '" + key + "'");
    idx.push_back(v - 1);
  }
  return idx;
}

template <typename F>
auto wrap_model(F f) {
  try {
    return f();
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ModelError(e.what());
  } catch (const std::logic_error& e) {
    throw ModelError(e.what());
  }
}

}  // namespace

AlgebraicReal parse_lambda_spec(const std::string& raw) {
  const std::string spec = trim(raw);
  if (starts_with(spec, "rational:")) {
    return AlgebraicReal::from_rational(rat_or_usage(spec.substr(9), "rational lambda"));
  }
  if (starts_with(spec, "poly:")) {
    const auto at = spec.find('@');
    if (at == std::string::npos) throw UsageError("poly lambda needs '@(lo,hi)': '" + spec + "'");
    std::vector<Int> coeffs;
    for (const auto& c : split(spec.substr(5, at - 5), ',')) {
      Rat v = rat_or_usage(c, "polynomial coefficient");
      if (v.get_den() != 1) throw UsageError("polynomial coefficients must be integers");
      coeffs.push_back(v.get_num());
    }
    std::string iv = trim(spec.substr(at + 1));
    if (iv.size() < 5 || iv.front() != '(' || iv.back() != ')') throw UsageError("interval must look like (lo,hi)");
    auto ends = split(iv.substr(1, iv.size() - 2), ',');
    if (ends.size() != 2) throw UsageError("interval must have two endpoints");
    const Rat lo = rat_or_usage(ends[0], "interval endpoint"), hi = rat_or_usage(ends[1], "interval endpoint");
    if (!(lo < hi)) throw UsageError("interval must satisfy lo < hi");
    IntPoly p(coeffs);
    if (p.degree() < 1) throw UsageError("polynomial must be non-constant");
    const auto L = AlgebraicReal::from_rational(lo), H = AlgebraicReal::from_rational(hi);
    std::vector<AlgebraicReal> inside;
    for (const auto& r : isolate_real_roots(p))
      if (compare(r.value, L) > 0 && compare(r.value, H) < 0) inside.push_back(r.value);
    if (inside.size() != 1) {
      throw UsageError("interval must contain exactly one real root, found " + std::to_string(inside.size()));
    }
    return inside.front();
  }
  throw UsageError("lambda must start with 'rational:' or 'poly:': '" + spec + "'");
}

EigenSpec parse_eigen_spec(const std::string& raw, int multiplicity) {
  const std::string spec = trim(raw);
  if (starts_with(spec, "conjugate_pair:")) {
    Rat m = rat_or_usage(spec.substr(15), "conjugate-pair count");
    if (m.get_den() != 1 || m < 1) throw UsageError("conjugate-pair count must be a positive integer");
    return EigenSpec::conjugate_pair(static_cast<int>(m.get_num().get_si()) * multiplicity);
  }
  return EigenSpec::real(parse_lambda_spec(spec), multiplicity);
}

json algebraic_to_json(const AlgebraicReal& a) {
  json coeffs = json::array();
  for (const auto& c : a.minpoly().coefficients()) coeffs.push_back(to_string(c));
  return {{"minpoly", coeffs}, {"interval", {to_string(a.lo()), to_string(a.hi())}}, {"approx", a.approx()}};
}

AlgebraicReal algebraic_from_json(const json& j) {
  check_keys(j, {"minpoly", "interval", "approx"}, "algebraic number");
  std::vector<Int> coeffs;
  for (const auto& c : require(j, "minpoly", "algebraic number")) {
    Rat v = json_rat(c, "minpoly coefficient");
    if (v.get_den() != 1) throw UsageError("minpoly coefficients must be integers");
    coeffs.push_back(v.get_num());
  }
  const auto& iv = require(j, "interval", "algebraic number");
  if (!iv.is_array() || iv.size() != 2) throw UsageError("interval must have two entries");
  try {
    return AlgebraicReal(IntPoly(coeffs), json_rat(iv[0], "interval"), json_rat(iv[1], "interval"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid algebraic number: ") + e.what());
  }
}

json profile_to_json(const BettiProfile& p) { return {{"lambda", algebraic_to_json(p.lambda)}, {"betti", p.betti}}; }

BettiProfile profile_from_json(const json& j) {
  check_keys(j, {"lambda", "betti"}, "profile");
  BettiProfile p{algebraic_from_json(require(j, "lambda", "profile")), {}};
  for (const auto& b : require(j, "betti", "profile")) {
    if (!b.is_number_integer()) throw UsageError("betti entries must be integers");
    p.betti.push_back(b.get<int>());
  }
  return p;
}

json form_to_json(int dim, const InvariantForm& f) {
  json out = json::object();
  const auto basis = wedge_basis(dim, f.degree);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (f.coeffs[t].is_zero()) continue;
    std::string key;
    for (int i = 0; i < dim; ++i)
      if (basis[t] >> i & 1u) key += (key.empty() ? "" : ",") + std::to_string(i + 1);
    out[key] = f.coeffs[t].is_constant() ? to_string(f.coeffs[t].constant_value()) : to_string(f.coeffs[t]);
  }
  return out;
}

InvariantForm form_from_json(int dim, const json& j) {
  if (!j.is_object()) throw UsageError("form must be an object of index lists");
  int degree = -1;
  InvariantForm f;
  for (const auto& [key, value] : j.items()) {
    auto idx = index_key(key, dim);
    if (degree >= 0 && static_cast<int>(idx.size()) != degree) throw UsageError("form terms differ in degree");
    if (degree < 0) {
      degree = static_cast<int>(idx.size());
      f = InvariantForm::zero(dim, degree);
    }
    if (std::set<int>(idx.begin(), idx.end()).size() != idx.size()) throw UsageError("repeated index in '" + key + "'");
    f = f + json_expr(value, "form coefficient") * basis_form(dim, idx);
  }
  if (degree < 0) throw UsageError("form needs at least one term");
  return f;
}

json certificate_to_json(int dim, const TamingCertificate& c) {
  json j = {{"kind", to_string(c.kind)},
            {"verdict", c.feasible ? "feasible" : "infeasible"},
            {"lambda_min", c.lambda_min},
            {"coefficients", c.coefficients},
            {"dim", dim},
            {"form", form_to_json(dim, c.form)},
            {"restarts", c.restarts_run}};
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

TamingCertificate certificate_from_json(const json& j) {
  check_keys(j, {"kind", "verdict", "lambda_min", "coefficients", "dim", "form", "restarts", "reason"}, "certificate");
  TamingCertificate c;
  const std::string kind = require(j, "kind", "certificate").get<std::string>();
  if (kind != "lck" && kind != "taming") throw UsageError("certificate kind must be lck or taming");
  c.kind = kind == "lck" ? TamingKind::Lck : TamingKind::Taming;
  c.feasible = require(j, "verdict", "certificate").get<std::string>() == "feasible";
  c.lambda_min = require(j, "lambda_min", "certificate").get<double>();
  c.coefficients = require(j, "coefficients", "certificate").get<std::vector<double>>();
  const int dim = require(j, "dim", "certificate").get<int>();
  const auto& form = require(j, "form", "certificate");
  c.form = form.empty() ? InvariantForm::zero(dim, 2) : form_from_json(dim, form);
  if (j.contains("restarts")) c.restarts_run = j.at("restarts").get<int>();
  if (j.contains("reason")) c.reason = j.at("reason").get<std::string>();
  return c;
}

bool operator==(const TamingCertificate& a, const TamingCertificate& b) {
  return a.kind == b.kind && a.feasible == b.feasible && a.lambda_min == b.lambda_min &&
         a.coefficients == b.coefficients && a.form == b.form && a.reason == b.reason &&
         a.restarts_run == b.restarts_run;
}

namespace {

ModelFile parse_torus(const json& j) {
  check_keys(j, {"type", "name", "matrix", "alpha"}, "torus_monodromy model");
  ModelFile mf;
  mf.fiber = wrap_model([&] { return FiberModel::torus_monodromy(json_matrix(require(j, "matrix", "model"), "matrix")); });
  if (j.contains("alpha")) mf.alpha = parse_lambda_spec(j.at("alpha").get<std::string>());
  return mf;
}

ModelFile parse_descriptor(const json& j) {
  check_keys(j, {"type", "name", "dims", "actions", "eigenvalues", "alpha"}, "fiber_descriptor model");
  ModelFile mf;
  if (j.contains("actions") == j.contains("eigenvalues")) {
    throw UsageError("fiber_descriptor needs exactly one of 'actions' and 'eigenvalues'");
  }
  std::vector<int> dims;
  if (j.contains("dims")) {
    for (const auto& d : j.at("dims")) {
      if (!d.is_number_integer()) throw UsageError("dims must be integers");
      dims.push_back(d.get<int>());
    }
  }
  if (j.contains("actions")) {
    std::vector<Matrix<Rat>> actions;
    for (const auto& a : j.at("actions")) actions.push_back(json_matrix(a, "action"));
    if (!dims.empty()) {
      if (dims.size() != actions.size()) throw UsageError("dims and actions differ in length");
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (actions[k].rows() != dims[k]) throw ModelError("action in degree " + std::to_string(k) + " has the wrong size");
      }
    }
    mf.fiber = wrap_model([&] { return FiberModel::explicit_actions(actions); });
  } else {
    if (dims.empty()) throw UsageError("eigenvalue descriptors need 'dims'");
    std::vector<std::vector<EigenSpec>> eig;
    for (const auto& degree : j.at("eigenvalues")) {
      if (!degree.is_array()) throw UsageError("eigenvalues must be one list per degree");
      std::vector<EigenSpec> list;
      for (const auto& e : degree) {
        if (e.is_string()) {
          list.push_back(parse_eigen_spec(e.get<std::string>()));
        } else {
          check_keys(e, {"value", "multiplicity"}, "eigenvalue entry");
          const auto& m = require(e, "multiplicity", "eigenvalue entry");
          if (!m.is_number_integer()) throw UsageError("multiplicity must be an integer");
          list.push_back(parse_eigen_spec(require(e, "value", "eigenvalue entry").get<std::string>(), m.get<int>()));
        }
      }
      eig.push_back(list);
    }
    mf.fiber = wrap_model([&] { return FiberModel::eigen_descriptor(dims, eig); });
  }
  if (j.contains("alpha")) mf.alpha = parse_lambda_spec(j.at("alpha").get<std::string>());
  return mf;
}

std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw UsageError(what + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw UsageError(what + " must be a list of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

ModelFile parse_lie(const json& j) {
  check_keys(j, {"type", "name", "dim", "params", "basis", "duals", "brackets", "theta", "J", "coframe", "named_forms"},
             "lie_algebra model");
  const auto& d = require(j, "dim", "lie_algebra model");
  if (!d.is_number_integer() || d.get<int>() < 1 || d.get<int>() > 12) throw UsageError("dim must be an integer in 1..12");
  const int n = d.get<int>();
  LieAlgebraModel m(n);
  if (j.contains("params")) m.params = string_list(j.at("params"), "params");
  if (j.contains("basis")) m.basis_names = string_list(j.at("basis"), "basis");
  if (j.contains("duals")) m.dual_names = string_list(j.at("duals"), "duals");
  if (static_cast<int>(m.basis_names.size()) != n || static_cast<int>(m.dual_names.size()) != n) {
    throw UsageError("basis and duals need dim names");
  }
  if (j.contains("brackets")) {
    std::set<std::pair<int, int>> seen;
    for (const auto& b : j.at("brackets")) {
      check_keys(b, {"i", "j", "coeffs"}, "bracket");
      const auto& bi = require(b, "i", "bracket");
      const auto& bj = require(b, "j", "bracket");
      if (!bi.is_number_integer() || !bj.is_number_integer()) throw UsageError("bracket indices must be integers");
      const int i = bi.get<int>(), k = bj.get<int>();
      if (i < 1 || k < 1 || i > n || k > n || i == k) throw UsageError("bracket indices out of range");
      if (!seen.insert({std::min(i, k), std::max(i, k)}).second) throw UsageError("bracket given twice");
      std::vector<RatFunc> v(n, RatFunc(0));
      const auto& coeffs = require(b, "coeffs", "bracket");
      if (!coeffs.is_object()) throw UsageError("bracket coeffs must be an object");
      for (const auto& [key, val] : coeffs.items()) {
        auto idx = index_key(key, n);
        if (idx.size() != 1) throw UsageError("bracket coefficient keys are single indices");
        v[idx[0]] = json_expr(val, "bracket coefficient");
      }
      m.set_bracket(i - 1, k - 1, v);
    }
  }
  if (j.contains("theta")) {
    const auto& t = j.at("theta");
    if (t.is_string() && t.get<std::string>() == "zero") {
      m.theta.assign(n, RatFunc(0));
    } else {
      if (!t.is_array() || static_cast<int>(t.size()) != n) throw UsageError("theta must list dim coefficients");
      for (int i = 0; i < n; ++i) m.theta[i] = json_expr(t[i], "theta");
    }
  } else {
    m.theta.assign(n, RatFunc(0));
  }
  if (j.contains("J")) {
    const auto& J = j.at("J");
    if (!J.is_array() || static_cast<int>(J.size()) != n) throw UsageError("J must be a dim x dim matrix");
    Matrix<RatFunc> M(n, n);
    for (int r = 0; r < n; ++r) {
      if (!J[r].is_array() || static_cast<int>(J[r].size()) != n) throw UsageError("J must be a dim x dim matrix");
      for (int c = 0; c < n; ++c) M(r, c) = json_expr(J[r][c], "J entry");
    }
    m.J = M;
  }
  if (j.contains("coframe")) {
    if (!j.at("coframe").is_boolean()) throw UsageError("coframe must be true or false");
    m.coframe_metric = j.at("coframe").get<bool>();
  }
  if (j.contains("named_forms")) {
    if (!j.at("named_forms").is_object()) throw UsageError("named_forms must be an object");
    for (const auto& [name, f] : j.at("named_forms").items()) m.named_forms[name] = form_from_json(n, f);
  }
  auto rep = validate(m);
  if (!rep.ok) {
    std::string msg = "invalid Lie algebra model:";
    for (const auto& v : rep.violations) msg += "\n  " + v;
    throw ModelError(msg);
  }
  ModelFile mf;
  mf.algebra = m;
  return mf;
}

}  // namespace

ModelFile parse_model(const json& j) {
  if (!j.is_object()) throw UsageError("model file must be a JSON object");
  const auto& t = require(j, "type", "model file");
  if (!t.is_string()) throw UsageError("'type' must be a string");
  const std::string type = t.get<std::string>();
  ModelFile mf;
  try {
    if (type == "torus_monodromy") mf = parse_torus(j);
    else if (type == "fiber_descriptor") mf = parse_descriptor(j);
    else if (type == "lie_algebra") mf = parse_lie(j);
    else throw UsageError("unknown model type '" + type + "'");
  } catch (const json::exception& e) {
    throw UsageError(std::string("schema error: ") + e.what());
  }
  mf.type = type;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw UsageError("'name' must be a string");
    mf.name = j.at("name").get<std::string>();
  }
  return mf;
}

ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open model file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("model file is not valid JSON: " + std::string(e.what()));
  }
  ModelFile mf = parse_model(j);
  if (mf.name.empty()) mf.name = path;
  return mf;
}

}  // namespace novikov
