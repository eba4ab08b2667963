#include "maxvisit/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace maxvisit {

namespace {

Mutation g_mutation = Mutation::None;

Int binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

Int pow2(long long e) {
  Int out = 1;
  out <<= static_cast<unsigned>(e);
  return out;
}

}  // namespace

void set_mutation(Mutation m) { g_mutation = m; }
Mutation current_mutation() { return g_mutation; }

std::optional<Rational> BoundTable::find(int h, const Rational& rho) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find({h, rho});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void BoundTable::store(int h, const Rational& rho, const Rational& value) {
  std::lock_guard lock(mutex_);
  entries_.emplace(std::make_pair(h, rho), value);
}

Rational b_tail(long long n, long long k) {
  if (k <= 0) return 1;
  if (k > n) return 0;
  Int sum = 0;
  for (long long i = 0; i <= n - k; ++i) {
    sum += g_mutation == Mutation::PrintedBinomialIndex ? binomial(i / 2, n)
                                                        : binomial(n, i / 2);
  }
  return Rational(sum, pow2(n));
}

CaseTag classify_case(int h, const Rational& rho) {
  if (rho <= 0) return CaseTag::Absorbed;
  if (rho > h) return CaseTag::Dead;
  if (is_integer(rho)) return CaseTag::IntegerCase;
  if ((h - 1) % 2 == 1 && rho < 1) return CaseTag::SmallOddCase;
  Int parity = floor_int(rho) + (h - 1);
  if (parity % 2 == 0) return CaseTag::EvenFloorCase;
  return CaseTag::OddFloorCase;
}

StepDistribution optimal_step(int h, const Rational& rho) {
  switch (classify_case(h, rho)) {
    case CaseTag::IntegerCase:
      return {1, Rational(1, 2), 1, Rational(1, 2)};
    case CaseTag::SmallOddCase:
      // Land at remaining 0 or 1.
      return {rho, 1 - rho, 1 - rho, rho};
    case CaseTag::EvenFloorCase: {
      // Land at floor(rho) or rho + 1.
      Rational alpha = frac_part(rho);
      Rational up_p = Rational(1) / (1 + alpha);
      Rational down_p = alpha / (1 + alpha);
      if (g_mutation == Mutation::SwapCase3Probs) std::swap(up_p, down_p);
      return {alpha, up_p, 1, down_p};
    }
    case CaseTag::OddFloorCase: {
      // Land at rho - 1 or ceil(rho).
      Rational alpha = frac_part(rho);
      return {1, (1 - alpha) / (2 - alpha), 1 - alpha, Rational(1) / (2 - alpha)};
    }
    case CaseTag::Absorbed:
    case CaseTag::Dead:
      break;
  }
  throw std::invalid_argument("optimal_step: no step is defined at an absorbed or dead state");
}

Rational d_recursive(int h, const Rational& rho, BoundTable& table) {
  if (rho <= 0) return 1;
  if (rho > h) return 0;
  if (auto hit = table.find(h, rho)) return *hit;
  StepDistribution step = optimal_step(h, rho);
  Rational value = step.up_prob * d_recursive(h - 1, rho - step.up, table) +
                   step.down_prob * d_recursive(h - 1, rho + step.down, table);
  table.store(h, rho, value);
  return value;
}

Rational d_recursive(int h, const Rational& rho) {
  BoundTable table;
  return d_recursive(h, rho, table);
}

Rational d_closed_odd(int n, const Rational& x) {
  auto [m_big, alpha] = decompose_level(x);
  long long m = m_big.convert_to<long long>();
  if ((m + n) % 2 == 0) throw std::invalid_argument("d_closed_odd: m + n must be odd");
  long long h = (n - m - 1) / 2;
  Rational sum = 0;
  Rational coeff = Rational(1) / (1 + alpha);  // a_i = alpha^i / (1+alpha)^(i+1)
  for (long long i = 0; i <= h; ++i) {
    sum += coeff * b_tail(n - i - 1, m + i);
    coeff *= alpha / (1 + alpha);
  }
  return sum;
}

Rational d_closed_even(int n, const Rational& x) {
  auto [m_big, alpha] = decompose_level(x);
  long long m = m_big.convert_to<long long>();
  if ((m + n) % 2 != 0) throw std::invalid_argument("d_closed_even: m + n must be even");
  Rational ratio = (1 - alpha) / (2 - alpha);
  Rational sum = 0;
  Rational coeff = Rational(1) / (2 - alpha);  // b_i = (1-alpha)^i / (2-alpha)^(i+1)
  for (long long i = 0; i < m; ++i) {
    sum += coeff * b_tail(n - i - 1, m - i + 1);
    coeff *= ratio;
  }
  Rational tail = pow_rational(ratio, static_cast<unsigned>(m));
  sum += alpha * tail * b_tail(n - m - 1, 1);
  sum += (1 - alpha) * tail * b_tail(n - m - 2, 0);
  return sum;
}

Rational d_value(int n, const Rational& x, Method method) {
  if (x <= 0) return 1;
  if (x > n) return 0;
  if (method == Method::Recursion) return d_recursive(n, x);
  long long m = floor_int(x).convert_to<long long>();
  return (m + n) % 2 != 0 ? d_closed_odd(n, x) : d_closed_even(n, x);
}

std::pair<Rational, bool> d_value_checked(int n, const Rational& x) {
  Rational closed = d_value(n, x, Method::Closed);
  Rational recursive = d_value(n, x, Method::Recursion);
  return {closed, closed == recursive};
}

double hoeffding_bound(int n, const Rational& x) {
  double xf = to_double(x);
  return std::exp(-xf * xf / (2.0 * n));
}

}  // namespace maxvisit
