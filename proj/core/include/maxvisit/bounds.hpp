#pragma once

#include "maxvisit/rational.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace maxvisit {

// Which branch of the one-step recursion applies at (h steps remaining, rho).
enum class CaseTag {
  Absorbed,       // rho <= 0: target already reached
  Dead,           // rho > h: target unreachable, the walk idles
  IntegerCase,    // rho a positive integer: simple +-1 random walk
  SmallOddCase,   // h-1 odd, 0 < rho < 1: land at remaining 0 or 1
  EvenFloorCase,  // floor(rho) + (h-1) even: land at floor(rho) or rho+1
  OddFloorCase,   // ceil(rho) + (h-1) even, rho > 1: land at rho-1 or ceil(rho)
};

// Mean-zero two-point distribution of one extremal step. `up` moves toward
// the target (remaining distance shrinks by `up`), `down` away from it.
struct StepDistribution {
  Rational up;
  Rational up_prob;
  Rational down;
  Rational down_prob;
};

// Memo for d_recursive, keyed by (steps remaining, remaining distance).
// Entries are idempotent, so shared concurrent use only has to guarantee
// untorn reads; a mutex around the map is enough.
class BoundTable {
 public:
  std::optional<Rational> find(int h, const Rational& rho) const;
  void store(int h, const Rational& rho, const Rational& value);

 private:
  mutable std::mutex mutex_;
  std::map<std::pair<int, Rational>, Rational> entries_;
};

// Fault-injection hooks for the verification suites. Default None.
enum class Mutation {
  None,
  PrintedBinomialIndex,  // b_tail sums C(floor(i/2), n) instead of C(n, floor(i/2))
  SwapCase3Probs,        // optimal_step swaps the EvenFloorCase probabilities
};

void set_mutation(Mutation m);
Mutation current_mutation();

// Normalized tail sum of the n-k+1 smallest binomial coefficients of order n,
// extended by 1 for k <= 0 and 0 for k > n. Equals D_n(k) at integer levels.
Rational b_tail(long long n, long long k);

CaseTag classify_case(int h, const Rational& rho);

// The two-point distribution maximizing E D_{h-1}(rho - X) over mean-zero
// steps |X| <= 1. Throws std::invalid_argument on Absorbed/Dead states.
StepDistribution optimal_step(int h, const Rational& rho);

// D_h(rho) by the one-step recursion, memoized in `table`.
Rational d_recursive(int h, const Rational& rho, BoundTable& table);
Rational d_recursive(int h, const Rational& rho);

// Closed forms, dispatched on the parity of m + n where x = m + alpha.
// Each throws std::invalid_argument if called with the wrong parity.
Rational d_closed_odd(int n, const Rational& x);
Rational d_closed_even(int n, const Rational& x);

enum class Method { Auto, Recursion, Closed };

// D_n(x) with the boundary conventions D_n(x) = 1 for x <= 0,
// D_n(n) = 2^-n and D_n(x) = 0 for x > n.
Rational d_value(int n, const Rational& x, Method method = Method::Auto);

// Closed-form value plus an agreement flag against the recursion route.
std::pair<Rational, bool> d_value_checked(int n, const Rational& x);

// exp(-x^2 / 2n), the classical comparison curve.
double hoeffding_bound(int n, const Rational& x);

}  // namespace maxvisit
