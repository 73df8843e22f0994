#include "novikov/exact/ratfunc.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace novikov {

namespace {

// Lex comparison of exponent vectors, alphabetically earlier variables
// being more significant.
int lex_compare(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      if (a[i].second != b[j].second) return a[i].second < b[j].second ? -1 : 1;
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      return 1;
    } else {
      return -1;
    }
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return 0;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0;
  for (const auto& [name, e] : b) {
    while (i < a.size() && a[i].first < name) out.push_back(a[i++]);
    if (i == a.size() || a[i].first != name || a[i].second < e) return std::nullopt;
    if (a[i].second > e) out.emplace_back(name, a[i].second - e);
    ++i;
  }
  while (i < a.size()) out.push_back(a[i++]);
  return out;
}

}  // namespace

int total_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [name, e] : m) d += e;
  return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return lex_compare(a, b) < 0;
}

MPoly::MPoly(const Rat& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::var(const std::string& name) {
  MPoly p;
  p.terms_.emplace(Monomial{{name, 1}}, Rat(1));
  return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rat MPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
  return terms_.empty() ? -1 : novikov::total_degree(terms_.rbegin()->first);
}

std::pair<Monomial, Rat> MPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return *terms_.rbegin();
}

std::set<std::string> MPoly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m) out.insert(name);
  return out;
}

Rat MPoly::eval(const std::map<std::string, Rat>& at) const {
  Rat acc = 0;
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (const auto& [name, e] : m) {
      auto it = at.find(name);
      if (it == at.end()) throw std::invalid_argument("no value for parameter '" + name + "'");
      for (int k = 0; k < e; ++k) term *= it->second;
    }
    acc += term;
  }
  return acc;
}

double MPoly::eval_double(const std::map<std::string, double>& at) const {
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    double term = c.get_d();
    for (const auto& [name, e] : m) {
      auto it = at.find(name);
      if (it == at.end()) throw std::invalid_argument("no value for parameter '" + name + "'");
      term *= std::pow(it->second, e);
    }
    acc += term;
  }
  return acc;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
  return out;
}

std::optional<MPoly> exact_div(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  auto [lm_b, lc_b] = b.leading_term();
  MPoly rem = a, quo;
  while (!rem.is_zero()) {
    auto [lm_r, lc_r] = rem.leading_term();
    auto q = mono_div(lm_r, lm_b);
    if (!q) return std::nullopt;
    MPoly mono(Rat(lc_r / lc_b));
    for (const auto& [name, e] : *q)
      for (int k = 0; k < e; ++k) mono = mono * MPoly::var(name);
    quo = quo + mono;
    rem = rem - mono * b;
  }
  return quo;
}

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool need_star = false;
    if (mag != 1 || m.empty()) {
      os << mag.get_str();
      need_star = true;
    }
    for (const auto& [name, e] : m) {
      if (need_star) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (den_.is_constant()) {
    num_ = num_ * MPoly(Rat(1 / den_.constant_term()));
    den_ = MPoly(1);
    return;
  }
  if (auto q = exact_div(num_, den_)) {
    num_ = *q;
    den_ = MPoly(1);
    return;
  }
  if (auto q = exact_div(den_, num_)) {
    Rat c = q->leading_term().second;
    num_ = MPoly(Rat(1 / c));
    den_ = *q * MPoly(Rat(1 / c));
    return;
  }
  Rat c = den_.leading_term().second;
  if (c != 1) {
    num_ = num_ * MPoly(Rat(1 / c));
    den_ = den_ * MPoly(Rat(1 / c));
  }
}

Rat RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("rational function is not constant: " + to_string(*this));
  return num_.constant_term() / den_.constant_term();
}

std::set<std::string> RatFunc::variables() const {
  auto v = num_.variables();
  auto w = den_.variables();
  v.insert(w.begin(), w.end());
  return v;
}

Rat RatFunc::eval(const std::map<std::string, Rat>& at) const {
  Rat d = den_.eval(at);
  if (d == 0) throw std::domain_error("denominator vanishes at the evaluation point");
  return num_.eval(at) / d;
}

double RatFunc::eval_double(const std::map<std::string, double>& at) const {
  return num_.eval_double(at) / den_.eval_double(at);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RatFunc& f) {
  if (f.den().is_constant()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  RatFunc parse() {
    RatFunc v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  RatFunc expr() {
    RatFunc v = term();
    for (;;) {
      if (accept('+')) v = v + term();
      else if (accept('-')) v = v - term();
      else return v;
    }
  }
  RatFunc term() {
    RatFunc v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }
  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  RatFunc power() {
    RatFunc base = primary();
    if (!accept('^')) return base;
    skip();
    bool negative = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int e = std::stoi(s_.substr(start, pos_ - start));
    RatFunc out(1);
    for (int i = 0; i < e; ++i) out = out * base;
    if (negative) {
      if (out.is_zero()) fail("zero to a negative power");
      out = RatFunc(1) / out;
    }
    return out;
  }
  RatFunc primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return RatFunc(parse_rat(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return RatFunc::var(s_.substr(start, pos_ - start));
    }
    fail("unexpected character");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

// Deterministic, unlikely-to-be-special evaluation points.
std::map<std::string, Rat> sample_point(const std::set<std::string>& vars, int round) {
  static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
  std::map<std::string, Rat> at;
  int i = 0;
  for (const auto& v : vars) {
    long p = primes[(i + 3 * round) % 20];
    long q = primes[(2 * i + round + 7) % 20];
    at[v] = Rat(p * (round + 1) + i, q);
    ++i;
  }
  return at;
}

}  // namespace

RatFunc parse_expression(const std::string& text) { return ExprParser(text).parse(); }

Matrix<Rat> instantiate(const Matrix<RatFunc>& m, const std::map<std::string, Rat>& at) {
  return m.map([&](const RatFunc& f) { return f.eval(at); });
}

int rf_rank(const Matrix<RatFunc>& m) {
  const int rows = m.rows(), cols = m.cols();
  const int full = std::min(rows, cols);
  if (full == 0) return 0;

  std::set<std::string> vars;
  bool constant = true;
  for (const auto& e : m.entries()) {
    auto v = e.variables();
    vars.insert(v.begin(), v.end());
    if (!e.is_constant()) constant = false;
  }
  if (constant) return rank_rat(m.map([](const RatFunc& f) { return f.constant_value(); }));

  // A specialization never exceeds the generic rank, so full rank is final.
  for (int round = 0; round < 3; ++round) {
    try {
      if (rank_rat(instantiate(m, sample_point(vars, round))) == full) return full;
    } catch (const std::domain_error&) {
      // A denominator vanished at this point; try the next one.
    }
  }

  // Clear denominators row by row, then fraction-free elimination.
  Matrix<MPoly> a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    std::vector<MPoly> dens;
    for (int j = 0; j < cols; ++j) {
      const MPoly& d = m(i, j).den();
      if (d.is_constant()) continue;
      bool seen = false;
      for (const auto& e : dens) seen = seen || e == d;
      if (!seen) dens.push_back(d);
    }
    MPoly common(1);
    for (const auto& d : dens) common = common * d;
    for (int j = 0; j < cols; ++j) {
      auto q = exact_div(common, m(i, j).den());
      a(i, j) = m(i, j).num() * *q;
    }
  }

  MPoly prev(1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    int best = 0;
    for (int r = rank; r < rows; ++r) {
      if (a(r, col).is_zero()) continue;
      int deg = a(r, col).total_degree();
      if (pivot < 0 || deg < best) {
        pivot = r;
        best = deg;
      }
    }
    if (pivot < 0) continue;
    for (int c = 0; c < cols; ++c) std::swap(a(rank, c), a(pivot, c));
    const MPoly& p = a(rank, col);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        MPoly v = p * a(r, c) - a(r, col) * a(rank, c);
        auto q = exact_div(v, prev);
        if (!q) throw std::logic_error("fraction-free elimination: inexact division");
        a(r, c) = *q;
      }
      a(r, col) = MPoly();
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace novikov
