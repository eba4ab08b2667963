#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace maxvisit {

using Int = boost::multiprecision::cpp_int;

// Exact fraction type. cpp_rational keeps the denominator positive and the
// fraction in lowest terms, which is exactly the invariant we need.
using Rational = boost::multiprecision::cpp_rational;

Int floor_int(const Rational& r);
Int ceil_int(const Rational& r);

// Fractional part {r} = r - floor(r), always in [0, 1).
Rational frac_part(const Rational& r);

bool is_integer(const Rational& r);

double to_double(const Rational& r);

// base^exp by repeated exact multiplication.
Rational pow_rational(const Rational& base, unsigned exp);

// x = m + alpha with integer m and alpha in [0, 1).
struct LevelDecomposition {
  Int m;
  Rational alpha;
};

LevelDecomposition decompose_level(const Rational& x);

// Accepts "p/q", integer literals and finite decimals ("1.5" -> 3/2).
// The parse is lossless; returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

// "3/4" for proper fractions, "5" for integers.
std::string fraction_string(const Rational& r);

}  // namespace maxvisit
