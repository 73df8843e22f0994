#include "novikov/exact/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace novikov {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Int parse_int(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  std::string text(s);
  if (text[0] == '+') text.erase(0, 1);
  return Int(text, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole = "0";
    if (frac.empty()) frac = "0";
    Int w = parse_int(whole);
    Int f = parse_int(frac);
    if (frac.front() == '-' || frac.front() == '+') {
      throw std::invalid_argument("malformed decimal '" + std::string(s) + "'");
    }
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Int magnitude = abs(w) * scale + f;
    return make_rat(negative ? Int(-magnitude) : magnitude, scale);
  }
  return Rat(parse_int(s));
}

std::string to_string(const Int& value) { return value.get_str(); }

std::string to_string(const Rat& value) { return value.get_str(); }

Rat rat_from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite double");
  Rat r(value);
  r.canonicalize();
  return r;
}

double to_double(const Rat& value) { return value.get_d(); }

int sign(const Int& value) { return sgn(value); }

int sign(const Rat& value) { return sgn(value); }

}  // namespace novikov
