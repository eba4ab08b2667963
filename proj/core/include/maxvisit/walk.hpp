#pragma once

#include "maxvisit/bounds.hpp"
#include "maxvisit/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace maxvisit {

// State of the extremal walk: remaining = x - M_k, frozen once absorbed.
struct WalkState {
  long steps_elapsed = 0;
  Rational remaining;
  bool absorbed = false;
};

// A realized trajectory M_0 = 0, M_1, ..., M_n, already stopped at `target`.
struct WalkPath {
  std::vector<Rational> levels;
  long horizon = 0;
  Rational target;
};

struct McEstimate {
  double estimate = 0;
  double standard_error = 0;
  long long paths = 0;
  std::uint64_t seed = 0;
};

// Step law at the current state; nullopt means the walk idles (absorbed,
// or the target is out of reach within the remaining steps).
std::optional<StepDistribution> transition(const WalkState& state, long horizon);

// min{k : M_k >= x}, nullopt when the path never reaches the target.
std::optional<long> stopping_time(const WalkPath& path);

Rational path_max(const WalkPath& path);

// Deterministic draw of one stopped extremal path. `path_index` selects a
// substream so batch simulations stay reproducible path by path.
WalkPath simulate_path(long n, const Rational& x, std::uint64_t seed,
                       std::uint64_t path_index = 0);

// Fraction of stopped paths visiting [x, inf), with binomial standard error.
// Results are independent of `threads`.
McEstimate monte_carlo_estimate(long n, const Rational& x, long long paths,
                                std::uint64_t seed, unsigned threads = 1);

// P{extremal stopped walk visits [x, inf) in <= n steps} by exact forward DP
// over the reachable remaining-distance set. Equals d_value(n, x).
Rational exact_chain_probability(int n, const Rational& x);

}  // namespace maxvisit
