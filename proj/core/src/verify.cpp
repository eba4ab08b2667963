#include "maxvisit/verify.hpp"

#include "maxvisit/analysis.hpp"
#include "maxvisit/bounds.hpp"
#include "maxvisit/oracle.hpp"
#include "maxvisit/rng.hpp"
#include "maxvisit/walk.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace maxvisit {

std::vector<Rational> standard_grid(int n) {
  static const int denominators[] = {2, 3, 4, 7, 8, 16};
  std::set<Rational> points;
  for (int q : denominators) {
    for (int j = 0; j <= q * (n + 1); ++j) points.insert(Rational(j, q));
  }
  return {points.begin(), points.end()};
}

namespace {

void flag(SuiteResult& result, double magnitude, int n, const Rational& x) {
  if (magnitude > result.worst_violation) {
    result.worst_violation = magnitude;
    result.witnesses = {"n=" + std::to_string(n) + " x=" + fraction_string(x)};
  }
}

SuiteResult suite_closed_vs_recursion(int n_max) {
  SuiteResult result{"closed-vs-recursion", true};
  BoundTable table;
  for (int n = 0; n <= n_max; ++n) {
    for (const Rational& x : standard_grid(n)) {
      Rational recursive = d_recursive(n, x, table);
      Rational closed = d_value(n, x, Method::Auto);
      if (recursive != closed) {
        result.pass = false;
        flag(result, std::max(1e-30, std::fabs(to_double(recursive - closed))), n, x);
      }
    }
    // Integer-level identity against both the tail sum and the Rademacher form.
    for (int k = 0; k <= n; ++k) {
      Rational d = d_value(n, Rational(k));
      Rational b = b_tail(n, k);
      Rational tail = 2 * rademacher_tail(n, k + 1);
      if ((n + k) % 2 == 0) tail += rademacher_tail(n, k) - rademacher_tail(n, k + 1);
      if (d != b || b != tail) {
        result.pass = false;
        flag(result, std::max(1e-30, std::fabs(to_double(d - tail))), n, Rational(k));
      }
    }
  }
  return result;
}

SuiteResult suite_chain(int n_max) {
  SuiteResult result{"chain", true};
  BoundTable table;
  for (int n = 0; n <= n_max; ++n) {
    for (const Rational& x : standard_grid(n)) {
      Rational chain = exact_chain_probability(n, x);
      Rational direct = d_recursive(n, x, table);
      if (chain != direct) {
        result.pass = false;
        flag(result, std::max(1e-30, std::fabs(to_double(chain - direct))), n, x);
      }
    }
  }
  return result;
}

SuiteResult suite_envelope(int n_max) {
  SuiteResult result{"envelope", true};
  constexpr double kTolerance = 1e-2;
  EnvelopeOracle oracle(n_max, 1e-3, n_max + 1.0);
  BoundTable table;
  for (int n = 0; n <= n_max; ++n) {
    for (const Rational& x : standard_grid(n)) {
      double gap = std::fabs(oracle.value(n, to_double(x)) - to_double(d_recursive(n, x, table)));
      if (gap > result.worst_violation) flag(result, gap, n, x);
    }
  }
  result.pass = result.worst_violation <= kTolerance;
  return result;
}

SuiteResult suite_hoeffding(int n_max) {
  SuiteResult result{"hoeffding", true};
  BoundTable table;
  for (int n = 1; n <= n_max; ++n) {
    for (const Rational& x : standard_grid(n)) {
      if (x <= 0 || x > n) continue;
      double excess = to_double(d_recursive(n, x, table)) - hoeffding_bound(n, x);
      if (excess > 1e-12) {
        result.pass = false;
        flag(result, excess, n, x);
      }
    }
  }
  return result;
}

SuiteResult suite_analysis(int n_max) {
  SuiteResult result{"analysis", true};
  Rational step(1, 16);
  for (int n = 2; n <= n_max; ++n) {
    for (const PropertyReport& report :
         {check_piecewise_convexity(n, step), check_c1_junctions(n),
          check_dnelyg_inequalities(n, step), check_global_shape(n, step),
          compare_hoeffding(n, step)}) {
      if (!report.pass) {
        result.pass = false;
        if (report.worst_violation >= result.worst_violation) {
          result.worst_violation = report.worst_violation;
          result.witnesses = {report.property + " at " + report.grid};
        }
      }
    }
  }
  return result;
}

ConditionalStep generate_supermartingale_step(std::uint64_t seed, std::uint64_t index) {
  ConditionalStep step;
  step.step_class = StepClass::SuperMartingale;
  int size = 2 + static_cast<int>(counter_word(seed, index, 0) % 3);
  Rational total = 0;
  for (int i = 0; i < size; ++i) {
    std::uint64_t vw = counter_word(seed, index, 10 + static_cast<std::uint64_t>(i));
    std::uint64_t pw = counter_word(seed, index, 100 + static_cast<std::uint64_t>(i));
    Rational value(static_cast<long long>(vw % 2001) - 1000, 1000);
    Rational weight(static_cast<long long>(pw % 97) + 1);
    step.support.emplace_back(value, weight);
    total += weight;
  }
  for (auto& [value, probability] : step.support) probability /= total;
  if (step.mean() > 0) {
    for (auto& [value, probability] : step.support) value = -value;
  }
  return step;
}

SuiteResult suite_supermartingale(int) {
  SuiteResult result{"supermartingale", true};
  constexpr std::uint64_t kSeed = 0x5eedu;

  for (std::uint64_t i = 0; i < 1000; ++i) {
    ConditionalStep input = generate_supermartingale_step(kSeed, i);
    ConditionalStep output = supermartingale_compensator(input);
    bool ok = output.mean() == 0 && output.total_probability() == 1;
    for (size_t j = 0; j < output.support.size(); ++j) {
      const Rational& v = output.support[j].first;
      ok = ok && v >= -1 && v <= 1 && v >= input.support[j].first;
    }
    if (!ok) {
      result.pass = false;
      flag(result, 1.0, static_cast<int>(i), input.mean());
    }
  }

  // Exhaustive depth-3 trees: the compensated sum dominates the original
  // sum pathwise, hence in every tail probability.
  for (std::uint64_t tree = 0; tree < 25; ++tree) {
    struct Leaf {
      Rational original, compensated, probability;
    };
    std::vector<Leaf> leaves{{0, 0, 1}};
    std::uint64_t node = 0;
    for (int depth = 0; depth < 3; ++depth) {
      std::vector<Leaf> next;
      for (const Leaf& leaf : leaves) {
        ConditionalStep step = generate_supermartingale_step(kSeed + 7 * tree + 1, node++);
        ConditionalStep fixed = supermartingale_compensator(step);
        for (size_t j = 0; j < step.support.size(); ++j) {
          next.push_back({leaf.original + step.support[j].first,
                          leaf.compensated + fixed.support[j].first,
                          leaf.probability * step.support[j].second});
        }
      }
      leaves.swap(next);
    }
    std::set<Rational> thresholds;
    for (const Leaf& leaf : leaves) thresholds.insert(leaf.original);
    for (const Rational& x : thresholds) {
      Rational original_tail = 0, compensated_tail = 0;
      for (const Leaf& leaf : leaves) {
        if (leaf.original >= x) original_tail += leaf.probability;
        if (leaf.compensated >= x) compensated_tail += leaf.probability;
      }
      if (compensated_tail < original_tail) {
        result.pass = false;
        flag(result, to_double(original_tail - compensated_tail), static_cast<int>(tree), x);
      }
    }
  }
  return result;
}

SuiteResult suite_stopping(int n_max) {
  SuiteResult result{"stopping", true};
  int limit = std::min(n_max, 4);
  for (int n = 1; n <= limit; ++n) {
    for (int j = 1; j <= 4 * n; ++j) {
      Rational x(j, 4);
      Rational alpha = frac_part(x);
      std::vector<Rational> candidates{1,          -1,          Rational(1, 2), Rational(-1, 2),
                                       Rational(1, 4), Rational(-1, 4)};
      if (alpha != 0) {
        candidates.insert(candidates.end(), {alpha, -alpha, 1 - alpha, alpha - 1});
      }
      Rational terminal = brute_force_strategy_sup(n, x, candidates, Objective::Terminal);
      Rational running = brute_force_strategy_sup(n, x, candidates, Objective::RunningMax);
      Rational bound = d_value(n, x);
      if (terminal != running || running > bound) {
        result.pass = false;
        flag(result, std::fabs(to_double(running - terminal)) +
                         std::max(0.0, to_double(running - bound)),
             n, x);
      }
    }
  }
  return result;
}

}  // namespace

std::vector<std::string> all_suite_names() {
  return {"closed-vs-recursion", "chain",           "envelope", "hoeffding",
          "analysis",            "supermartingale", "stopping"};
}

SuiteResult run_suite(const std::string& name, int n_max, unsigned) {
  if (name == "closed-vs-recursion") return suite_closed_vs_recursion(n_max);
  if (name == "chain") return suite_chain(std::min(n_max, 20));
  if (name == "envelope") return suite_envelope(std::min(n_max, 8));
  if (name == "hoeffding") return suite_hoeffding(n_max);
  if (name == "analysis") return suite_analysis(std::min(n_max, 15));
  if (name == "supermartingale") return suite_supermartingale(n_max);
  if (name == "stopping") return suite_stopping(n_max);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace maxvisit
