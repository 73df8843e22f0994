#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace novikov {

// Arbitrary-precision scalars. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// after canonicalize(), which every constructor below performs.
using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);

/// Parses "p", "p/q" or a finite decimal such as "-1.25". Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

std::string to_string(const Int& value);
std::string to_string(const Rat& value);

/// Exact binary value of a finite double.
Rat rat_from_double(double value);
double to_double(const Rat& value);

int sign(const Int& value);
int sign(const Rat& value);

}  // namespace novikov
