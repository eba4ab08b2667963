#pragma once

#include "maxvisit/rational.hpp"

#include <span>
#include <vector>

namespace maxvisit {

enum class StepClass { Martingale, SuperMartingale };

// Finite-support one-step distribution on [-1, 1].
struct ConditionalStep {
  std::vector<std::pair<Rational, Rational>> support;  // (value, probability)
  StepClass step_class = StepClass::Martingale;

  Rational mean() const;
  Rational total_probability() const;
};

// Exact P{R_n >= k} for the symmetric +-1 walk.
Rational rademacher_tail(long long n, long long k);

struct EnvelopePoint {
  double t = 0;
  double y = 0;
};

struct EnvelopeResult {
  double value = 0;
  double support_lo = 0;  // touching abscissa <= 0
  double support_hi = 0;  // touching abscissa >= 0
};

// Value at t = 0 of the least concave majorant of the samples, with the pair
// of touching abscissas bracketing 0 (degenerate (0,0) when a sample at 0
// lies on the hull). Abscissas must be strictly increasing and span 0.
EnvelopeResult envelope_at_zero(std::span<const EnvelopePoint> samples);

// Grid value iteration re-deriving D_h as the concave-envelope fixed point:
// V_0 = 1{rho <= 0}, V_h(rho) = envelope at 0 of t -> V_{h-1}(rho - t).
// The table is shared across queries, which is what makes grid sweeps cheap.
class EnvelopeOracle {
 public:
  EnvelopeOracle(int max_steps, double resolution, double rho_max);

  double value(int n, double x) const;
  EnvelopeResult envelope(int n, double x) const;

  int max_steps() const { return max_steps_; }
  double resolution() const { return 1.0 / static_cast<double>(per_unit_); }

 private:
  double table_at(int h, double rho) const;
  std::vector<EnvelopePoint> gather_samples(int h, double rho) const;

  int max_steps_;
  long per_unit_;  // grid points per unit length
  long hi_index_;  // table covers rho = j / per_unit_, j in [-per_unit_, hi_index_]
  std::vector<std::vector<double>> levels_;
};

// One-shot convenience form of the oracle above.
double envelope_value_iteration(int n, const Rational& x, double grid_resolution);

enum class Objective { Terminal, RunningMax };

// Exact optimum of P{objective >= x} over depth-n strategy trees whose
// per-node steps are mean-zero two-point distributions (or no move at all)
// on the candidate values. Exhaustive via backward induction on positions.
Rational brute_force_strategy_sup(int n, const Rational& x,
                                  const std::vector<Rational>& candidate_steps,
                                  Objective objective);

// Theorem check at desk scale: terminal-sum optimum equals running-max
// optimum on the candidate family (the running-max optimum is attained by
// the stopped strategy by construction of the absorbing DP).
bool verify_stopping_equivalence(int n, const Rational& x,
                                 const std::vector<Rational>& candidate_steps);

// Couples a super-martingale step X (mean e <= 0) with Y = (X-1)e/(1-e):
// each value v maps to (v-e)/(1-e) with unchanged probability. The output
// has exact mean zero, values in [-1,1], and dominates the input pointwise.
ConditionalStep supermartingale_compensator(const ConditionalStep& step);

}  // namespace maxvisit
