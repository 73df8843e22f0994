#include "novikov/cli.hpp"

#include "novikov/catalog.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

namespace novikov {

namespace {

std::vector<long> int_list(const std::string& text, const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + item + "' in " + what);
    }
  }
  return out;
}

template <typename F>
auto model_guard(F f) {
  try {
    return f();
  } catch (const UsageError&) {
    throw;
  } catch (const ModelError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ModelError(e.what());
  } catch (const std::logic_error& e) {
    throw ModelError(e.what());
  }
}

SpmDatum spm_datum(const std::string& args, bool plus) {
  SpmDatum d = plus ? splus_default() : sminus_default();
  if (args == "default") return d;
  auto v = int_list(args, plus ? "splus" : "sminus");
  if (v.size() != 4 && v.size() != 7) throw UsageError("expected n11,n12,n21,n22[,p,q,r]");
  d.N = Matrix<Rat>::from_rows({{Rat(v[0]), Rat(v[1])}, {Rat(v[2]), Rat(v[3])}});
  if (v.size() == 7) {
    d.p = v[4];
    d.q = v[5];
    d.r = v[6];
  }
  return d;
}

std::string lambda_text(const AlgebraicReal& a) {
  std::ostringstream os;
  os << to_string(a);
  if (!a.is_rational()) os << " ~ " << std::setprecision(10) << a.approx();
  return os.str();
}

std::string pad(const std::string& s, std::size_t width) {
  // Width counts code points so UTF-8 stays aligned.
  std::size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  return cps >= width ? s + " " : s + std::string(width - cps, ' ');
}

struct Selector {
  std::string lambda;
  std::string lambda_log;
  std::string theta;
  bool at_alpha = false;
  bool at_inverse = false;
  std::vector<std::string> params;
};

AlgebraicReal alpha_power(const AlgebraicReal& alpha, long k) {
  if (k == 0) return AlgebraicReal::from_rational(1);
  AlgebraicReal p = std::abs(k) == 1 ? alpha : alg_pow(alpha, static_cast<int>(std::abs(k)));
  return k > 0 ? p : alg_reciprocal(p);
}

AlgebraicReal lambda_from_log(const std::string& t, const std::optional<AlgebraicReal>& alpha) {
  static const std::regex re(R"(^\s*([+-]?\d*)\s*\*?\s*ln\(\s*alpha\s*\)\s*$)");
  std::smatch mt;
  if (std::regex_match(t, std::regex(R"(^\s*[+-]?0+\s*$)"))) return AlgebraicReal::from_rational(1);
  if (!std::regex_match(t, mt, re)) {
    throw UsageError("--lambda-log accepts only integer multiples k*ln(alpha); for other Lee classes pass "
                     "lambda = e^t directly with --lambda rational:<p/q> or poly:<coeffs>@(lo,hi)");
  }
  if (!alpha) throw UsageError("--lambda-log needs a model with a distinguished alpha");
  std::string k = mt[1];
  long kv = k.empty() || k == "+" ? 1 : k == "-" ? -1 : std::stol(k);
  return alpha_power(*alpha, kv);
}

AlgebraicReal select_lambda(const ResolvedModel& m, const Selector& s) {
  const int count = !s.lambda.empty() + !s.lambda_log.empty() + s.at_alpha + s.at_inverse;
  if (count != 1) {
    throw UsageError("give exactly one of --lambda, --lambda-log, --at-alpha, --at-inverse-alpha");
  }
  if (!s.theta.empty()) throw UsageError("--theta applies to Lie algebra models only");
  if (!s.lambda.empty()) {
    auto l = parse_lambda_spec(s.lambda);
    if (l.sign() <= 0) throw UsageError("Lee parameter must be positive");
    return l;
  }
  if (!s.lambda_log.empty()) return lambda_from_log(s.lambda_log, m.alpha);
  if (!m.alpha) throw UsageError("--at-alpha is valid only for models with a distinguished alpha");
  return s.at_alpha ? *m.alpha : alg_reciprocal(*m.alpha);
}

std::map<std::string, Rat> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, Rat> out;
  for (const auto& p : items) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects name=value, got '" + p + "'");
    try {
      out[p.substr(0, eq)] = parse_rat(p.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("bad value in --param '" + p + "'");
    }
  }
  return out;
}

// Applies --param, --theta and the alpha selectors. `numeric` instantiates
// the float-derived catalog constants when the user supplied none.
LieAlgebraModel prepare_algebra(const ResolvedModel& m, const Selector& s, bool numeric) {
  if (!s.lambda.empty() || !s.lambda_log.empty()) {
    throw UsageError("Lie algebra models take --theta, --at-alpha or --at-inverse-alpha instead of a lambda value");
  }
  if ((!s.theta.empty()) + s.at_alpha + s.at_inverse > 1) throw UsageError("give at most one theta selector");
  LieAlgebraModel a = *m.algebra;
  auto values = parse_params(s.params);
  if (values.empty() && numeric && m.numeric_params) values = *m.numeric_params;
  if (!values.empty()) {
    std::vector<std::string> missing;
    for (const auto& p : a.params)
      if (!values.count(p)) missing.push_back(p);
    for (const auto& [k, v] : values) {
      if (std::find(a.params.begin(), a.params.end(), k) == a.params.end()) {
        throw UsageError("unknown parameter '" + k + "'");
      }
    }
    if (!missing.empty()) throw UsageError("--param must set every parameter; missing " + missing.front());
    a = instantiate(a, values);
  }
  if (!s.theta.empty()) {
    if (s.theta == "zero") {
      a.theta.assign(a.dim(), RatFunc(0));
    } else {
      std::vector<RatFunc> t;
      std::stringstream ss(s.theta);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          t.push_back(parse_expression(item));
        } catch (const std::exception& e) {
          throw UsageError("bad --theta entry '" + item + "': " + e.what());
        }
      }
      if (static_cast<int>(t.size()) != a.dim()) throw UsageError("--theta needs one coefficient per basis vector");
      a.theta = t;
    }
    auto rep = validate(a);
    if (!rep.ok) throw ModelError("theta rejected: " + rep.violations.front());
  }
  if (s.at_inverse)
    for (auto& t : a.theta) t = -t;
  if (numeric && !a.params.empty()) {
    throw UsageError("instantiate parameters with --param name=value (missing " + a.params.front() + ")");
  }
  return a;
}

json theta_json(const LieAlgebraModel& a) {
  json t = json::array();
  for (const auto& c : a.theta) t.push_back(c.is_constant() ? to_string(c.constant_value()) : to_string(c));
  return t;
}

bool all_zero(const std::vector<int>& b) {
  return std::all_of(b.begin(), b.end(), [](int v) { return v == 0; });
}

// ----- verify -----

struct CheckList {
  json checks = json::array();
  bool ok = true;
  void add(const std::string& name, bool pass, const std::string& detail, json extra = nullptr) {
    json c = {{"name", name}, {"ok", pass}, {"detail", detail}};
    if (!extra.is_null()) c["rows"] = extra;
    checks.push_back(c);
    ok = ok && pass;
  }
};

BettiProfile profile_of(const ResolvedModel& m, const AlgebraicReal& l) {
  auto p = twisted_betti(*m.fiber, l);
  return m.blowups ? blow_up(p, m.blowups) : p;
}

void verify_fiber(const ResolvedModel& m, CheckList& out) {
  const auto& f = *m.fiber;
  auto ex = exceptional_lambdas(f);
  std::vector<AlgebraicReal> pts = ex;
  for (const Rat& r : {Rat(2), Rat(1, 3), Rat(7, 5), Rat(11, 2)}) pts.push_back(AlgebraicReal::from_rational(r));
  pts.push_back(isolate_real_roots(IntPoly(std::vector<Int>{-2, 0, 1})).back().value);
  pts.push_back(isolate_real_roots(IntPoly(std::vector<Int>{-1, -2, 0, 1})).back().value);

  bool dual_ok = true, euler_ok = true, edge_ok = true, vanish_ok = true;
  json rows = json::array();
  const long chi0 = euler_char(profile_of(m, pts.front()));
  const long chi_expected = m.blowups;
  for (const auto& l : pts) {
    const auto p = profile_of(m, l);
    const auto q = profile_of(m, alg_reciprocal(l));
    auto r = p.betti;
    std::reverse(r.begin(), r.end());
    const bool pair_ok = r == q.betti;
    dual_ok = dual_ok && pair_ok;
    rows.push_back({{"lambda", lambda_text(l)},
                    {"inverse", lambda_text(alg_reciprocal(l))},
                    {"betti", p.betti},
                    {"betti_inverse", q.betti},
                    {"ok", pair_ok}});
    euler_ok = euler_ok && euler_char(p) == chi0 && chi0 == chi_expected;
    const bool is_one = l.is_rational() && l.rational_value() == 1;
    if (!is_one) edge_ok = edge_ok && p.betti.front() == 0 && p.betti.back() == 0;
    bool exceptional = false;
    for (const auto& e : ex) exceptional = exceptional || alg_eq(e, l);
    if (!exceptional) {
      auto b = p.betti;
      if (m.blowups) b[2] -= m.blowups;
      vanish_ok = vanish_ok && all_zero(b);
    }
  }
  out.add("duality", dual_ok, std::to_string(pts.size()) + " (lambda, 1/lambda) pairs", rows);
  out.add("euler_invariance", euler_ok, "chi = " + std::to_string(chi0) + ", expected " + std::to_string(chi_expected));
  out.add("edge_vanishing", edge_ok, "b_0 = b_top = 0 for lambda != 1");
  out.add("vanishing_off_exceptional", vanish_ok, std::to_string(ex.size()) + " exceptional values");
  if (m.blowups) {
    auto p = profile_of(m, AlgebraicReal::from_rational(2));
    out.add("blow_up", p.betti[2] == m.blowups, "b_2 = " + std::to_string(p.betti[2]) + " at lambda = 2");
  }
  if (m.alpha) {
    bool in = false;
    for (const auto& e : ex) in = in || alg_eq(e, *m.alpha);
    const bool gt = compare(*m.alpha, AlgebraicReal::from_rational(1)) > 0;
    out.add("distinguished_alpha", in && gt, "alpha = " + lambda_text(*m.alpha));
  }
  if (f.mode() == FiberModel::Mode::TorusMonodromy) {
    try {
      auto e = to_eigen_descriptor(f);
      bool same = true;
      for (const auto& l : pts) same = same && twisted_betti(f, l).betti == twisted_betti(e, l).betti;
      out.add("mode_consistency", same, "torus vs eigen-descriptor encodings");
    } catch (const std::invalid_argument& e) {
      out.add("mode_consistency", true, std::string("skipped: ") + e.what());
    }
  }
}

bool unimodular(const LieAlgebraModel& a) {
  for (int i = 0; i < a.dim(); ++i) {
    RatFunc tr;
    for (int k = 0; k < a.dim(); ++k) tr = tr + a.bracket(i, k)[k];
    if (!tr.is_zero()) return false;
  }
  return true;
}

void verify_algebra(const ResolvedModel& m, CheckList& out) {
  const auto& a = *m.algebra;
  auto rep = validate(a);
  out.add("validate", rep.ok, rep.ok ? "Jacobi, d^2 = 0, d theta = 0, J" : rep.violations.front());
  if (!rep.ok) return;
  const int n = a.dim();
  bool dd = true;
  for (int p = 0; p + 2 <= n; ++p) {
    for (unsigned mask : wedge_basis(n, p)) {
      std::vector<int> idx;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) idx.push_back(i);
      dd = dd && d_theta_apply(a, d_theta_apply(a, basis_form(n, idx))).is_zero();
    }
  }
  out.add("d_theta_squared", dd, "all basis forms");
  auto h = twisted_ce_cohomology(a);
  long chi = 0;
  for (std::size_t k = 0; k < h.size(); ++k) chi += (k % 2 ? -1 : 1) * h[k];
  out.add("ce_euler", chi == 0, "H = " + format_betti(h) + ", chi = " + std::to_string(chi));
  if (a.J) {
    auto cert = obstruction_search(a);
    if (cert) out.add("obstruction", verify_obstruction(a, cert->x), cert->description);
    else out.add("obstruction", true, "none found within the search budget");
  }
  if (m.name == "splus-algebra") {
    auto sp = make_splus(splus_default());
    auto b = twisted_betti(sp.fiber, sp.alpha).betti;
    out.add("solvable_bridge", h == b, format_betti(h) + " vs fiber profile " + format_betti(b));
  }
  if (m.name == "s0-algebra" && m.numeric_params) {
    // Not completely solvable: listed side by side, equality is not asserted.
    auto s0 = make_s0(s0_default_matrix());
    auto at = instantiate(a, *m.numeric_params);
    auto inv = at;
    for (auto& t : inv.theta) t = -t;
    out.add("invariant_vs_full", true,
            "informational: invariant " + format_betti(twisted_ce_cohomology(at)) + " / " +
                format_betti(twisted_ce_cohomology(inv)) + ", fiber model " +
                format_betti(twisted_betti(s0.fiber, s0.alpha).betti) + " / " +
                format_betti(twisted_betti(s0.fiber, alg_reciprocal(s0.alpha)).betti) + " at alpha / 1/alpha");
  }
  if (a.coframe_metric) {
    std::map<std::string, Rat> vals;
    Rat v(-1, 7);
    for (const auto& p : a.params) {
      vals[p] = v;
      v = v + Rat(5, 7);
    }
    const LieAlgebraModel c = vals.empty() ? a : instantiate(a, vals);
    if (unimodular(c)) {
      bool adj = true;
      for (int k = 0; k < n; ++k) {
        for (unsigned ma : wedge_basis(n, k)) {
          for (unsigned mb : wedge_basis(n, k + 1)) {
            std::vector<int> ia, ib;
            for (int i = 0; i < n; ++i) {
              if (ma >> i & 1u) ia.push_back(i);
              if (mb >> i & 1u) ib.push_back(i);
            }
            auto fa = basis_form(n, ia), fb = basis_form(n, ib);
            adj = adj && inner(d_theta_apply(c, fa), fb) == inner(fa, delta_theta(c, fb));
          }
        }
      }
      out.add("adjointness", adj, "<d a, b> = <a, delta b> on basis forms");
    } else {
      out.add("adjointness", true, "skipped: algebra is not unimodular");
    }
    try {
      auto hd = harmonic_dims(c);
      auto hc = twisted_ce_cohomology(c);
      out.add("harmonic", hd == hc, "ker Laplacian " + format_betti(hd) + " vs cohomology " + format_betti(hc));
    } catch (const std::logic_error& e) {
      out.add("harmonic", false, e.what());
    }
  }
}

// ----- output -----

void print_profile(std::ostream& out, const std::string& name, const BettiProfile& p) {
  out << "model: " << name << "\n";
  out << "lambda: " << lambda_text(p.lambda) << "\n";
  out << "b = " << format_betti(p.betti) << "\n";
}

int cmd_cohomology(const std::string& name, const Selector& s, bool as_json, std::ostream& out) {
  const auto m = resolve_model(name);
  if (m.fiber) {
    const auto p = model_guard([&] { return profile_of(m, select_lambda(m, s)); });
    if (as_json) out << profile_to_json(p).dump(2) << "\n";
    else print_profile(out, m.name, p);
    return 0;
  }
  const auto a = prepare_algebra(m, s, false);
  const auto h = twisted_ce_cohomology(a);
  if (as_json) {
    out << json{{"theta", theta_json(a)}, {"betti", h}}.dump(2) << "\n";
  } else {
    out << "model: " << m.name << "\n";
    out << "theta: " << to_string(a, one_form(a.theta)) << "\n";
    out << "b = " << format_betti(h) << "\n";
  }
  return 0;
}

int cmd_scan(const std::string& name, bool as_json, std::ostream& out) {
  const auto m = resolve_model(name);
  if (!m.fiber) throw UsageError("scan needs a fiber model; Lie algebra models have no lambda family");
  json rows = json::array();
  std::vector<std::pair<std::string, BettiProfile>> table;
  for (const auto& l : exceptional_lambdas(*m.fiber)) {
    auto p = profile_of(m, l);
    rows.push_back(profile_to_json(p));
    table.emplace_back(to_string(l), p);
  }
  if (as_json) {
    out << json{{"model", m.name}, {"rows", rows}}.dump(2) << "\n";
    return 0;
  }
  std::size_t w = 8;
  for (const auto& [s, p] : table) w = std::max(w, s.size() + 2);
  out << pad("lambda", w) << pad("≈", 14) << "betti\n";
  for (const auto& [s, p] : table) {
    std::ostringstream approx;
    approx << std::fixed << std::setprecision(8) << p.lambda.approx();
    out << pad(s, w) << pad(approx.str(), 14) << format_betti(p.betti) << "\n";
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& names, bool as_json, std::ostream& out) {
  json report = json::array();
  bool ok = true;
  for (const auto& n : names) {
    auto r = verify_model(resolve_model(n));
    ok = ok && r.at("ok").get<bool>();
    report.push_back(r);
  }
  if (as_json) {
    out << json{{"ok", ok}, {"models", report}}.dump(2) << "\n";
  } else {
    for (const auto& r : report) {
      out << "model " << r.at("model").get<std::string>() << "\n";
      for (const auto& c : r.at("checks")) {
        out << "  " << (c.at("ok").get<bool>() ? "PASS  " : "FAIL  ") << pad(c.at("name").get<std::string>(), 28)
            << c.at("detail").get<std::string>() << "\n";
        if (c.contains("rows")) {
          for (const auto& row : c.at("rows")) {
            out << "        " << format_betti(row.at("betti").get<std::vector<int>>()) << " at "
                << row.at("lambda").get<std::string>() << "  <->  "
                << format_betti(row.at("betti_inverse").get<std::vector<int>>()) << " at 1/lambda\n";
          }
        }
      }
    }
    out << (ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  return ok ? 0 : 4;
}

struct ConeFlags {
  std::string kind;
  int restarts = -1, max_iter = -1;
  double tol = -1;
  std::optional<std::uint64_t> seed;
};

int cmd_cone(const std::string& name, const Selector& s, const ConeFlags& f, bool as_json, std::ostream& out) {
  const auto m = resolve_model(name);
  if (!m.algebra) throw UsageError("cone needs a Lie algebra model");
  if (f.kind != "taming" && f.kind != "lck") throw UsageError("--kind must be taming or lck");
  const auto a = prepare_algebra(m, s, true);
  if (!a.J) throw UsageError("cone needs a model with an almost-complex structure J");
  ConeOptions opt = ConeOptions::from_environment();
  if (f.restarts > 0) opt.restarts = f.restarts;
  if (f.max_iter > 0) opt.max_iterations = f.max_iter;
  if (f.tol > 0) opt.tolerance = f.tol;
  if (f.seed) opt.seed = *f.seed;
  const auto cert = taming_feasibility(a, f.kind == "lck" ? TamingKind::Lck : TamingKind::Taming, opt);
  const bool rechecked = recheck_certificate(a, cert);
  if (as_json) {
    json j = certificate_to_json(a.dim(), cert);
    out << j.dump(2) << "\n";
  } else {
    out << "model: " << m.name << "\n";
    out << "theta: " << to_string(a, one_form(a.theta)) << "\n";
    out << "kind: " << to_string(cert.kind) << "\n";
    out << "verdict: " << (cert.feasible ? "feasible" : "infeasible (numerical evidence, not proof)") << "\n";
    out << "lambda_min: " << std::setprecision(10) << cert.lambda_min << "\n";
    out << "form: " << to_string(a, cert.form) << "\n";
    if (!cert.reason.empty()) out << "reason: " << cert.reason << "\n";
    out << "exact recheck: " << (rechecked ? "ok" : "FAILED") << "\n";
  }
  return rechecked ? 0 : 4;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"s0:default", "splus:default", "sminus:default", "hopf",          "kato:1",        "kato:5",
          "kato:7",     "torus:3",       "ot:1",           "ot:2",          "s0-algebra",    "splus-algebra",
          "splus-coframe", "abelian4"};
}

ResolvedModel resolve_model(const std::string& name) {
  ResolvedModel m;
  m.name = name;
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : name.substr(colon + 1);
  const bool has_args = colon != std::string::npos;
  if (head == "s0" && has_args) {
    Matrix<Rat> A = s0_default_matrix();
    if (args != "default") {
      auto v = int_list(args, "s0 matrix");
      if (v.size() != 9) throw UsageError("s0 needs 9 comma-separated integers (row major)");
      for (int i = 0; i < 9; ++i) A(i / 3, i % 3) = Rat(v[i]);
    }
    auto s0 = model_guard([&] { return make_s0(A); });
    m.fiber = s0.fiber;
    m.alpha = s0.alpha;
  } else if ((head == "splus" || head == "sminus") && has_args) {
    const bool plus = head == "splus";
    auto d = spm_datum(args, plus);
    auto sm = model_guard([&] { return plus ? make_splus(d) : make_sminus(d); });
    m.fiber = sm.fiber;
    m.alpha = sm.alpha;
  } else if (name == "hopf") {
    m.fiber = make_hopf();
  } else if (head == "kato" && has_args) {
    auto v = int_list(args, "kato");
    if (v.size() != 1) throw UsageError("kato:<n> takes one integer");
    model_guard([&] { return make_kato(static_cast<int>(v[0]), AlgebraicReal::from_rational(2)); });
    m.fiber = make_hopf();
    m.blowups = static_cast<int>(v[0]);
  } else if (head == "torus" && has_args) {
    auto v = int_list(args, "torus");
    if (v.size() != 1) throw UsageError("torus:<n> takes one integer");
    m.fiber = model_guard([&] { return torus_identity(static_cast<int>(v[0])); });
  } else if (head == "ot" && has_args) {
    auto v = int_list(args, "ot");
    if (v.size() != 1) throw UsageError("ot:<s> takes one integer");
    m.algebra = model_guard([&] { return ot_algebra(static_cast<int>(v[0])); });
  } else if (name == "s0-algebra") {
    m.algebra = s0_algebra();
    m.numeric_params = s0_numeric_parameters(s0_default_matrix());
  } else if (name == "splus-algebra") {
    m.algebra = splus_algebra();
  } else if (name == "splus-coframe") {
    m.algebra = splus_coframe_model();
  } else if (name == "abelian4") {
    m.algebra = abelian4();
  } else if (std::filesystem::exists(name)) {
    auto mf = load_model_file(name);
    m.fiber = mf.fiber;
    m.alpha = mf.alpha;
    m.algebra = mf.algebra;
  } else {
    throw UsageError("unknown model '" + name + "' (not a catalog name or an existing file)");
  }
  return m;
}

json verify_model(const ResolvedModel& m) {
  CheckList checks;
  try {
    if (m.fiber) verify_fiber(m, checks);
    if (m.algebra) verify_algebra(m, checks);
  } catch (const std::exception& e) {
    checks.add("exception", false, e.what());
  }
  return {{"model", m.name}, {"ok", checks.ok}, {"checks", checks.checks}};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted cohomology of mapping tori and of Lie algebras with a closed Lee form"};
  app.require_subcommand(1);
  bool as_json = false;
  Selector sel;
  std::string model;

  auto add_selectors = [&](CLI::App* c, bool lambdas) {
    c->add_option("model", model, "catalog name or model file")->required();
    if (lambdas) {
      c->add_option("--lambda", sel.lambda, "rational:<p/q> or poly:<c0,...,cd>@(lo,hi)");
      c->add_option("--lambda-log", sel.lambda_log, "k*ln(alpha) with integer k");
    }
    c->add_flag("--at-alpha", sel.at_alpha, "use the distinguished Lee class");
    c->add_flag("--at-inverse-alpha", sel.at_inverse, "use the opposite class");
    c->add_option("--theta", sel.theta, "Lee covector: 'zero' or comma-separated coefficients");
    c->add_option("--param", sel.params, "parameter value name=p/q (repeatable)");
    c->add_flag("--json", as_json, "print JSON only");
  };

  auto* coh = app.add_subcommand("cohomology", "twisted Betti numbers at one Lee class");
  add_selectors(coh, true);
  auto* scan = app.add_subcommand("scan", "exceptional Lee parameters with their profiles");
  scan->add_option("model", model, "catalog name or model file")->required();
  scan->add_flag("--json", as_json, "print JSON only");
  auto* ver = app.add_subcommand("verify", "run the invariant suite");
  std::vector<std::string> ver_models;
  bool all_catalog = false;
  ver->add_option("model", ver_models, "catalog names or model files");
  ver->add_flag("--all-catalog", all_catalog, "verify every catalog model");
  ver->add_flag("--json", as_json, "print JSON only");
  auto* cone = app.add_subcommand("cone", "invariant taming / LCK cone feasibility");
  add_selectors(cone, false);
  ConeFlags cf;
  std::uint64_t seed = 0;
  cone->add_option("--kind", cf.kind, "taming or lck")->required();
  cone->add_option("--restarts", cf.restarts, "random restarts (default 64)");
  cone->add_option("--max-iter", cf.max_iter, "iterations per restart (default 5000)");
  cone->add_option("--tol", cf.tol, "feasibility tolerance (default 1e-6)");
  auto* seed_opt = cone->add_option("--seed", seed, "RNG seed (default NOVIKOV_SEED or built-in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (coh->parsed()) return cmd_cohomology(model, sel, as_json, out);
    if (scan->parsed()) return cmd_scan(model, as_json, out);
    if (ver->parsed()) {
      if (all_catalog == !ver_models.empty()) throw UsageError("give model names or --all-catalog");
      return cmd_verify(all_catalog ? catalog_names() : ver_models, as_json, out);
    }
    if (cone->parsed()) {
      if (seed_opt->count()) cf.seed = seed;
      return cmd_cone(model, sel, cf, as_json, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ModelError& e) {
    err << "invalid model: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace novikov
