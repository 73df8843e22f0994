#pragma once

#include "novikov/exact/matrix.hpp"
#include "novikov/exact/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace novikov {

/// Power product of named parameters, sorted by name, exponents positive.
using Monomial = std::vector<std::pair<std::string, int>>;

/// Graded lexicographic order, variables compared alphabetically.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

int total_degree(const Monomial& m);

/// Sparse multivariate polynomial over Q in named parameters.
class MPoly {
 public:
  MPoly() = default;
  MPoly(long c) : MPoly(Rat(c)) {}
  MPoly(const Rat& c);
  static MPoly var(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (the value when is_constant()).
  Rat constant_term() const;
  int total_degree() const;
  /// Largest term under grlex. Throws on zero.
  std::pair<Monomial, Rat> leading_term() const;
  const std::map<Monomial, Rat, GrlexLess>& terms() const { return terms_; }
  std::set<std::string> variables() const;

  Rat eval(const std::map<std::string, Rat>& at) const;
  double eval_double(const std::map<std::string, double>& at) const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

 private:
  void add_term(const Monomial& m, const Rat& c);
  std::map<Monomial, Rat, GrlexLess> terms_;
};

/// Quotient a / b when b divides a exactly; nullopt otherwise.
std::optional<MPoly> exact_div(const MPoly& a, const MPoly& b);

std::string to_string(const MPoly& p);

/// Element of Q(params): numerator over denominator. No gcd is taken;
/// constant denominators are folded in and exact divisions are cancelled.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(const Rat& c) : num_(c), den_(1) {}
  RatFunc(MPoly p) : num_(std::move(p)), den_(1) {}
  RatFunc(MPoly num, MPoly den);
  static RatFunc var(const std::string& name) { return RatFunc(MPoly::var(name)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant element; throws std::logic_error otherwise.
  Rat constant_value() const;
  std::set<std::string> variables() const;

  /// Throws std::domain_error when the denominator vanishes at the point.
  Rat eval(const std::map<std::string, Rat>& at) const;
  double eval_double(const std::map<std::string, double>& at) const;

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  void normalize();
  MPoly num_, den_;
};

inline bool is_zero(const RatFunc& v) { return v.is_zero(); }

std::string to_string(const RatFunc& f);

/// Parses +, -, *, /, ^integer, parentheses, rational or decimal literals
/// and identifiers. Throws std::invalid_argument with the offending position.
RatFunc parse_expression(const std::string& text);

/// Rank over the rational-function field in all parameters that occur.
/// A full-rank specialization at a rational point settles the rank at once;
/// otherwise fraction-free elimination runs with smallest-degree pivots.
int rf_rank(const Matrix<RatFunc>& m);

/// Substitute rational values for parameters; throws if any remain free
/// or a denominator vanishes.
Matrix<Rat> instantiate(const Matrix<RatFunc>& m, const std::map<std::string, Rat>& at);

}  // namespace novikov
