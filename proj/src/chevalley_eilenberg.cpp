#include "novikov/chevalley_eilenberg.hpp"

#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace novikov {

namespace {

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

std::vector<int> mask_indices(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

// Sign of the permutation sorting seq, 0 on a repeated index.
int sort_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) ++inversions;
    }
  return inversions % 2 ? -1 : 1;
}

unsigned seq_mask(const std::vector<int>& seq) {
  unsigned m = 0;
  for (int i : seq) m |= 1u << i;
  return m;
}

// Lookup table: mask -> position within its degree.
std::vector<int> index_table(int dim) {
  std::vector<int> table(1u << dim, -1);
  for (int p = 0; p <= dim; ++p) {
    auto b = wedge_basis(dim, p);
    for (std::size_t i = 0; i < b.size(); ++i) table[b[i]] = static_cast<int>(i);
  }
  return table;
}

void check_form(const LieAlgebraModel& m, const InvariantForm& phi) {
  if (phi.degree < 0 || phi.degree > m.dim() + 1 ||
      static_cast<int>(phi.coeffs.size()) != binom(m.dim(), phi.degree)) {
    throw std::invalid_argument("form of degree " + std::to_string(phi.degree) + " has " +
                                std::to_string(phi.coeffs.size()) + " coefficients, expected " +
                                std::to_string(binom(m.dim(), phi.degree)));
  }
}

bool all_constant(const LieAlgebraModel& m) {
  for (int i = 0; i < m.dim(); ++i) {
    if (!m.theta[i].is_constant()) return false;
    for (int j = i + 1; j < m.dim(); ++j)
      for (const auto& v : m.bracket(i, j))
        if (!v.is_constant()) return false;
  }
  return true;
}

Matrix<Rat> constant_matrix(const Matrix<RatFunc>& a) {
  return a.map([](const RatFunc& f) { return f.constant_value(); });
}

template <class Op>
Matrix<RatFunc> operator_matrix(const LieAlgebraModel& m, int p, int q, Op op) {
  auto src = wedge_basis(m.dim(), p);
  Matrix<RatFunc> out(binom(m.dim(), q), static_cast<int>(src.size()));
  for (std::size_t j = 0; j < src.size(); ++j) {
    InvariantForm img = op(basis_form(m.dim(), mask_indices(src[j])));
    for (int i = 0; i < out.rows(); ++i) out(i, static_cast<int>(j)) = img.coeffs[i];
  }
  return out;
}

}  // namespace

InvariantForm InvariantForm::zero(int dim, int degree) {
  return InvariantForm{degree, std::vector<RatFunc>(binom(dim, degree), RatFunc())};
}

bool InvariantForm::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

InvariantForm operator+(const InvariantForm& a, const InvariantForm& b) {
  if (a.degree != b.degree || a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("adding forms of different degree");
  InvariantForm c = a;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] += b.coeffs[i];
  return c;
}

InvariantForm operator-(const InvariantForm& a, const InvariantForm& b) { return a + RatFunc(-1) * b; }

InvariantForm operator*(const RatFunc& s, const InvariantForm& a) {
  InvariantForm c = a;
  for (auto& v : c.coeffs) v = s * v;
  return c;
}

bool operator==(const InvariantForm& a, const InvariantForm& b) {
  return a.degree == b.degree && a.coeffs == b.coeffs;
}

LieAlgebraModel::LieAlgebraModel(int dim)
    : theta(dim, RatFunc()),
      dim_(dim),
      c_(dim, std::vector<std::vector<RatFunc>>(dim, std::vector<RatFunc>(dim, RatFunc()))) {
  if (dim < 1 || dim > 12) throw std::invalid_argument("Lie algebra dimension must be in 1..12");
  for (int i = 0; i < dim; ++i) {
    basis_names.push_back("e" + std::to_string(i + 1));
    dual_names.push_back("e" + std::to_string(i + 1));
  }
}

void LieAlgebraModel::set_bracket(int i, int j, const std::vector<RatFunc>& value) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_ || static_cast<int>(value.size()) != dim_) {
    throw std::invalid_argument("bracket index or length out of range");
  }
  if (i == j) {
    for (const auto& v : value)
      if (!v.is_zero()) throw std::invalid_argument("[e_i, e_i] must vanish");
    return;
  }
  c_[i][j] = value;
  for (int k = 0; k < dim_; ++k) c_[j][i][k] = -value[k];
}

const std::vector<RatFunc>& LieAlgebraModel::bracket(int i, int j) const { return c_[i][j]; }

std::vector<RatFunc> LieAlgebraModel::bracket(const std::vector<RatFunc>& x, const std::vector<RatFunc>& y) const {
  std::vector<RatFunc> out(dim_, RatFunc());
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (i == j || y[j].is_zero()) continue;
      RatFunc s = x[i] * y[j];
      for (int k = 0; k < dim_; ++k)
        if (!c_[i][j][k].is_zero()) out[k] += s * c_[i][j][k];
    }
  }
  return out;
}

std::vector<RatFunc> LieAlgebraModel::apply_J(const std::vector<RatFunc>& x) const {
  if (!J) throw std::logic_error("model has no almost-complex structure");
  std::vector<RatFunc> out(dim_, RatFunc());
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (!x[j].is_zero() && !(*J)(i, j).is_zero()) out[i] += (*J)(i, j) * x[j];
  return out;
}

int LieAlgebraModel::index_of(const std::string& name) const {
  for (int i = 0; i < dim_; ++i)
    if (dual_names[i] == name) return i;
  for (int i = 0; i < dim_; ++i)
    if (basis_names[i] == name) return i;
  return -1;
}

std::vector<unsigned> wedge_basis(int dim, int degree) {
  std::vector<unsigned> out;
  for (const auto& s : subsets(dim, degree)) out.push_back(seq_mask(s));
  return out;
}

int wedge_index(int dim, unsigned mask) {
  auto b = wedge_basis(dim, std::popcount(mask));
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] == mask) return static_cast<int>(i);
  throw std::invalid_argument("mask outside the wedge basis");
}

InvariantForm basis_form(int dim, const std::vector<int>& indices) {
  InvariantForm f = InvariantForm::zero(dim, static_cast<int>(indices.size()));
  for (int i : indices)
    if (i < 0 || i >= dim) throw std::out_of_range("basis index out of range");
  int s = sort_sign(indices);
  if (s == 0) return f;
  f.coeffs[wedge_index(dim, seq_mask(indices))] = RatFunc(s);
  return f;
}

InvariantForm one_form(const std::vector<RatFunc>& coeffs) { return InvariantForm{1, coeffs}; }

InvariantForm wedge(int dim, const InvariantForm& a, const InvariantForm& b) {
  InvariantForm out = InvariantForm::zero(dim, a.degree + b.degree);
  if (a.degree + b.degree > dim) return out;
  auto ba = wedge_basis(dim, a.degree), bb = wedge_basis(dim, b.degree);
  auto table = index_table(dim);
  for (std::size_t i = 0; i < ba.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < bb.size(); ++j) {
      if (b.coeffs[j].is_zero() || (ba[i] & bb[j])) continue;
      auto seq = mask_indices(ba[i]);
      auto tail = mask_indices(bb[j]);
      seq.insert(seq.end(), tail.begin(), tail.end());
      RatFunc term = a.coeffs[i] * b.coeffs[j];
      int idx = table[ba[i] | bb[j]];
      if (sort_sign(seq) > 0) out.coeffs[idx] += term;
      else out.coeffs[idx] -= term;
    }
  }
  return out;
}

InvariantForm d_apply(const LieAlgebraModel& m, const InvariantForm& phi) {
  check_form(m, phi);
  const int n = m.dim();
  InvariantForm out = InvariantForm::zero(n, phi.degree + 1);
  if (phi.degree >= n) return out;
  auto basis = wedge_basis(n, phi.degree);
  auto table = index_table(n);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (phi.coeffs[t].is_zero()) continue;
    auto idx = mask_indices(basis[t]);
    for (std::size_t r = 0; r < idx.size(); ++r) {
      const int k = idx[r];
      // d e^k = −Σ_{a<b} c^k_ab e^a∧e^b, inserted at slot r with sign (−1)^r.
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          const RatFunc& c = m.bracket(a, b)[k];
          if (c.is_zero()) continue;
          std::vector<int> seq(idx.begin(), idx.begin() + static_cast<long>(r));
          seq.push_back(a);
          seq.push_back(b);
          seq.insert(seq.end(), idx.begin() + static_cast<long>(r) + 1, idx.end());
          int s = sort_sign(seq);
          if (s == 0) continue;
          if (r % 2) s = -s;
          RatFunc term = phi.coeffs[t] * c;
          int pos = table[seq_mask(seq)];
          // Leading minus from dα(X,Y) = −α([X,Y]).
          if (s > 0) out.coeffs[pos] -= term;
          else out.coeffs[pos] += term;
        }
    }
  }
  return out;
}

InvariantForm d_twisted(const LieAlgebraModel& m, const std::vector<RatFunc>& covector, const InvariantForm& phi) {
  InvariantForm d = d_apply(m, phi);
  if (phi.degree >= m.dim()) return d;
  return d - wedge(m.dim(), one_form(covector), phi);
}

InvariantForm d_theta_apply(const LieAlgebraModel& m, const InvariantForm& phi) { return d_twisted(m, m.theta, phi); }

Matrix<RatFunc> d_theta_matrix(const LieAlgebraModel& m, int p) {
  return operator_matrix(m, p, p + 1, [&](const InvariantForm& f) { return d_theta_apply(m, f); });
}

std::vector<int> twisted_ce_cohomology(const LieAlgebraModel& m) {
  const int n = m.dim();
  std::vector<int> rank(n + 1, 0);
  for (int p = 0; p < n; ++p) rank[p] = rf_rank(d_theta_matrix(m, p));
  std::vector<int> h(n + 1);
  for (int p = 0; p <= n; ++p) h[p] = binom(n, p) - rank[p] - (p > 0 ? rank[p - 1] : 0);
  return h;
}

InvariantForm hodge_star(const LieAlgebraModel& m, const InvariantForm& phi) {
  if (!m.coframe_metric) throw std::invalid_argument("no metric declared: coframe is not marked orthonormal");
  check_form(m, phi);
  const int n = m.dim();
  InvariantForm out = InvariantForm::zero(n, n - phi.degree);
  auto basis = wedge_basis(n, phi.degree);
  auto table = index_table(n);
  const unsigned full = (1u << n) - 1;
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (phi.coeffs[t].is_zero()) continue;
    auto seq = mask_indices(basis[t]);
    auto rest = mask_indices(full & ~basis[t]);
    seq.insert(seq.end(), rest.begin(), rest.end());
    int pos = table[full & ~basis[t]];
    if (sort_sign(seq) > 0) out.coeffs[pos] += phi.coeffs[t];
    else out.coeffs[pos] -= phi.coeffs[t];
  }
  return out;
}

InvariantForm delta_theta(const LieAlgebraModel& m, const InvariantForm& phi) {
  const int n = m.dim();
  const int p = phi.degree;
  if (p == 0) {
    check_form(m, phi);
    if (!m.coframe_metric) throw std::invalid_argument("no metric declared: coframe is not marked orthonormal");
    return InvariantForm{-1, {}};
  }
  std::vector<RatFunc> minus_theta;
  for (const auto& t : m.theta) minus_theta.push_back(-t);
  InvariantForm r = hodge_star(m, d_twisted(m, minus_theta, hodge_star(m, phi)));
  const int e = p + (p - 1) * (n - p + 1);
  return e % 2 ? RatFunc(-1) * r : r;
}

InvariantForm laplacian_theta(const LieAlgebraModel& m, const InvariantForm& phi) {
  InvariantForm out = InvariantForm::zero(m.dim(), phi.degree);
  if (phi.degree < m.dim()) out = out + delta_theta(m, d_theta_apply(m, phi));
  if (phi.degree > 0) out = out + d_theta_apply(m, delta_theta(m, phi));
  return out;
}

RatFunc inner(const InvariantForm& a, const InvariantForm& b) {
  if (a.degree != b.degree) return RatFunc();
  RatFunc s;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) s += a.coeffs[i] * b.coeffs[i];
  return s;
}

std::vector<InvariantForm> harmonic_basis(const LieAlgebraModel& m, int p) {
  if (!m.coframe_metric) throw std::invalid_argument("no metric declared: coframe is not marked orthonormal");
  if (!all_constant(m)) throw std::invalid_argument("instantiate parameters before computing harmonic forms");
  auto lap = constant_matrix(operator_matrix(m, p, p, [&](const InvariantForm& f) { return laplacian_theta(m, f); }));
  std::vector<InvariantForm> out;
  for (const auto& v : kernel_rat(lap)) {
    InvariantForm f = InvariantForm::zero(m.dim(), p);
    for (std::size_t i = 0; i < v.size(); ++i) f.coeffs[i] = RatFunc(v[i]);
    out.push_back(f);
  }
  return out;
}

std::vector<int> harmonic_dims(const LieAlgebraModel& m) {
  const int n = m.dim();
  std::vector<int> dims;
  for (int p = 0; p <= n; ++p) {
    auto harmonic = harmonic_basis(m, p);
    // ker d_θ ∩ ker δ_θ via the stacked operator.
    const int cols = binom(n, p);
    const int rd = p < n ? binom(n, p + 1) : 0;
    const int rdelta = p > 0 ? binom(n, p - 1) : 0;
    Matrix<Rat> stacked(rd + rdelta, cols);
    if (rd) {
      auto d = constant_matrix(d_theta_matrix(m, p));
      for (int i = 0; i < rd; ++i)
        for (int j = 0; j < cols; ++j) stacked(i, j) = d(i, j);
    }
    if (rdelta) {
      auto dl = constant_matrix(operator_matrix(m, p, p - 1, [&](const InvariantForm& f) { return delta_theta(m, f); }));
      for (int i = 0; i < rdelta; ++i)
        for (int j = 0; j < cols; ++j) stacked(rd + i, j) = dl(i, j);
    }
    const int joint = cols - rank_rat(stacked);
    bool contained = true;
    for (const auto& h : harmonic) {
      if (!d_theta_apply(m, h).is_zero()) contained = false;
      if (p > 0 && !delta_theta(m, h).is_zero()) contained = false;
    }
    if (joint != static_cast<int>(harmonic.size()) || !contained) {
      throw std::logic_error("harmonic forms differ from ker d_theta ∩ ker delta_theta in degree " + std::to_string(p));
    }
    dims.push_back(static_cast<int>(harmonic.size()));
  }
  return dims;
}

bool in_span(const InvariantForm& phi, const std::vector<InvariantForm>& forms) {
  const int rows = static_cast<int>(phi.coeffs.size());
  const int k = static_cast<int>(forms.size());
  Matrix<RatFunc> a(rows, k), b(rows, k + 1);
  for (int j = 0; j < k; ++j) {
    if (forms[j].degree != phi.degree) throw std::invalid_argument("span of forms of another degree");
    for (int i = 0; i < rows; ++i) a(i, j) = b(i, j) = forms[j].coeffs[i];
  }
  for (int i = 0; i < rows; ++i) b(i, k) = phi.coeffs[i];
  return rf_rank(a) == rf_rank(b);
}

ValidationReport validate(const LieAlgebraModel& m) {
  ValidationReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.violations.push_back(s);
  };
  const int n = m.dim();
  if (static_cast<int>(m.theta.size()) != n) {
    fail("theta has " + std::to_string(m.theta.size()) + " components, expected " + std::to_string(n));
    return rep;
  }
  std::set<std::string> declared(m.params.begin(), m.params.end());
  std::set<std::string> seen;
  auto note = [&](const RatFunc& f) {
    for (const auto& v : f.variables()) seen.insert(v);
  };
  for (int i = 0; i < n; ++i) {
    note(m.theta[i]);
    for (int j = 0; j < n; ++j)
      for (const auto& v : m.bracket(i, j)) note(v);
  }
  if (m.J)
    for (const auto& v : m.J->entries()) note(v);
  for (const auto& [name, f] : m.named_forms)
    for (const auto& v : f.coeffs) note(v);
  for (const auto& v : seen)
    if (!declared.count(v)) fail("undeclared parameter '" + v + "'");

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::vector<RatFunc> ei(n, RatFunc()), ej(n, RatFunc()), ek(n, RatFunc());
        ei[i] = ej[j] = ek[k] = RatFunc(1);
        auto s1 = m.bracket(m.bracket(ei, ej), ek);
        auto s2 = m.bracket(m.bracket(ej, ek), ei);
        auto s3 = m.bracket(m.bracket(ek, ei), ej);
        for (int c = 0; c < n; ++c) {
          if (!(s1[c] + s2[c] + s3[c]).is_zero()) {
            fail("Jacobi identity fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                 std::to_string(k + 1) + ")");
            break;
          }
        }
      }
  for (int k = 0; k < n; ++k) {
    InvariantForm ek = basis_form(n, {k});
    if (!d_apply(m, d_apply(m, ek)).is_zero()) fail("d(d e^" + std::to_string(k + 1) + ") != 0");
  }
  if (!d_apply(m, one_form(m.theta)).is_zero()) fail("theta is not closed");
  if (m.J) {
    if (m.J->rows() != n || m.J->cols() != n) {
      fail("J must be " + std::to_string(n) + "x" + std::to_string(n));
    } else {
      if (n % 2) fail("J requires even dimension");
      Matrix<RatFunc> sq = (*m.J) * (*m.J);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (sq(i, j) != RatFunc(i == j ? -1 : 0)) {
            fail("J^2 != -I at entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            i = n;
            break;
          }
    }
  }
  for (const auto& [name, f] : m.named_forms) {
    if (f.degree < 0 || f.degree > n || static_cast<int>(f.coeffs.size()) != binom(n, f.degree)) {
      fail("named form '" + name + "' has the wrong number of coefficients");
    }
  }
  return rep;
}

namespace {

std::vector<Rat> coefficient_grid() {
  std::vector<Rat> out;
  for (int q = 1; q <= 4; ++q)
    for (int p = -4 * q; p <= 4 * q; ++p) {
      if (p == 0) continue;
      Rat r(p, q);
      r.canonicalize();
      if (r.get_den() != q) continue;  // already listed with a smaller denominator
      out.push_back(r);
    }
  return out;
}

std::string describe(const LieAlgebraModel& m, const std::vector<Rat>& x) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.dim(); ++i) {
    if (x[i] == 0) continue;
    Rat mag = abs(x[i]);
    if (first) os << (x[i] < 0 ? "-" : "");
    else os << (x[i] < 0 ? " - " : " + ");
    if (mag != 1) os << mag.get_str() << "*";
    os << m.basis_names[i];
    first = false;
  }
  return "X = " + os.str();
}

}  // namespace

bool verify_obstruction(const LieAlgebraModel& m, const std::vector<Rat>& x) {
  if (!m.J) throw std::invalid_argument("obstruction needs an almost-complex structure J");
  bool nonzero = false;
  std::vector<RatFunc> xv;
  for (const auto& v : x) {
    nonzero = nonzero || v != 0;
    xv.emplace_back(v);
  }
  if (!nonzero || static_cast<int>(x.size()) != m.dim()) return false;
  auto jx = m.apply_J(xv);
  RatFunc tx, tjx;
  for (int i = 0; i < m.dim(); ++i) {
    tx += m.theta[i] * xv[i];
    tjx += m.theta[i] * jx[i];
  }
  if (!tx.is_zero() || !tjx.is_zero()) return false;
  for (const auto& c : m.bracket(xv, jx))
    if (!c.is_zero()) return false;
  return true;
}

std::optional<ObstructionCertificate> obstruction_search(const LieAlgebraModel& m, long budget) {
  if (!m.J) throw std::invalid_argument("obstruction search needs an almost-complex structure J");
  const int n = m.dim();
  auto found = [&](std::vector<Rat> x) -> std::optional<ObstructionCertificate> {
    if (!verify_obstruction(m, x)) return std::nullopt;
    return ObstructionCertificate{x, describe(m, x)};
  };
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> x(n, Rat(0));
    x[i] = 1;
    if (auto c = found(x)) return c;
  }
  const auto grid = coefficient_grid();
  long spent = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (const auto& c : grid) {
        std::vector<Rat> x(n, Rat(0));
        x[i] = 1;
        x[j] = c;
        if (auto cert = found(x)) return cert;
      }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (const auto& a : grid)
          for (const auto& b : grid) {
            if (++spent > budget) return std::nullopt;
            std::vector<Rat> x(n, Rat(0));
            x[i] = 1;
            x[j] = a;
            x[k] = b;
            if (auto cert = found(x)) return cert;
          }
  return std::nullopt;
}

LieAlgebraModel instantiate(const LieAlgebraModel& m, const std::map<std::string, Rat>& values) {
  auto sub = [&](const RatFunc& f) { return f.is_constant() ? f : RatFunc(f.eval(values)); };
  const int n = m.dim();
  LieAlgebraModel out(n);
  out.basis_names = m.basis_names;
  out.dual_names = m.dual_names;
  out.coframe_metric = m.coframe_metric;
  for (int i = 0; i < n; ++i) {
    out.theta[i] = sub(m.theta[i]);
    for (int j = i + 1; j < n; ++j) {
      std::vector<RatFunc> v;
      for (const auto& c : m.bracket(i, j)) v.push_back(sub(c));
      out.set_bracket(i, j, v);
    }
  }
  if (m.J) out.J = m.J->map(sub);
  for (const auto& [name, f] : m.named_forms) {
    InvariantForm g = f;
    for (auto& c : g.coeffs) c = sub(c);
    out.named_forms[name] = g;
  }
  for (const auto& p : m.params)
    if (!values.count(p)) out.params.push_back(p);
  return out;
}

RatFunc eval2(int dim, const InvariantForm& omega, const std::vector<RatFunc>& u, const std::vector<RatFunc>& v) {
  if (omega.degree != 2) throw std::invalid_argument("eval2 needs a 2-form");
  RatFunc s;
  int t = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j, ++t) {
      if (omega.coeffs[t].is_zero()) continue;
      s += omega.coeffs[t] * (u[i] * v[j] - u[j] * v[i]);
    }
  return s;
}

std::string to_string(const LieAlgebraModel& m, const InvariantForm& phi) {
  auto basis = wedge_basis(m.dim(), phi.degree);
  std::ostringstream os;
  bool first = true;
  for (std::size_t t = 0; t < basis.size(); ++t) {
    const RatFunc& c = phi.coeffs[t];
    if (c.is_zero()) continue;
    std::string cs = to_string(c);
    bool simple = c.is_constant();
    std::string names;
    for (int i : mask_indices(basis[t])) names += (names.empty() ? "" : "^") + m.dual_names[i];
    if (names.empty()) names = "1";
    const bool negative = simple && c.constant_value() < 0;
    const RatFunc mag = negative ? -c : c;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    if (mag == RatFunc(1)) os << names;
    else if (simple) os << to_string(mag) << "*" << names;
    else os << "(" << cs << ")*" << names;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace novikov
