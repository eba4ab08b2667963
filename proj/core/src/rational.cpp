#include "maxvisit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace maxvisit {

Int floor_int(const Rational& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  Int q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

Int ceil_int(const Rational& r) { return -floor_int(-r); }

Rational frac_part(const Rational& r) { return r - Rational(floor_int(r)); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational pow_rational(const Rational& base, unsigned exp) {
  Rational out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

LevelDecomposition decompose_level(const Rational& x) {
  Int m = floor_int(x);
  return {m, x - Rational(m)};
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) return std::nullopt;

  Rational value;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Int d(den);
    if (d == 0) return std::nullopt;
    value = Rational(Int(num), d);
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string fracs = s.substr(dot + 1);
    if (whole.empty() && fracs.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!fracs.empty() && !all_digits(fracs)) return std::nullopt;
    value = whole.empty() ? Rational(0) : Rational(Int(whole));
    if (!fracs.empty()) {
      Int den = 1;
      for (size_t i = 0; i < fracs.size(); ++i) den *= 10;
      value += Rational(Int(fracs), den);
    }
  } else {
    if (!all_digits(s)) return std::nullopt;
    value = Rational(Int(s));
  }
  return negative ? -value : value;
}

std::string fraction_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace maxvisit
