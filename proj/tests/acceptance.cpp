// Acceptance suite: one pass/fail line per criterion. Exits nonzero if any
// criterion fails. argv[1] must be the path to the maxvisit CLI binary
// (used by the mutation-sensitivity criterion).

#include "maxvisit/analysis.hpp"
#include "maxvisit/bounds.hpp"
#include "maxvisit/oracle.hpp"
#include "maxvisit/rng.hpp"
#include "maxvisit/verify.hpp"
#include "maxvisit/walk.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <set>
#include <string>
#include <thread>
#include <vector>

using namespace maxvisit;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << label;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++failures;
}

// 1. d_recursive = parity closed form = exact chain DP, exactly, n <= 20.
void criterion_three_route_exactness() {
  BoundTable table;
  bool pass = true;
  std::string witness;
  for (int n = 0; n <= 20 && pass; ++n) {
    for (const Rational& x : standard_grid(n)) {
      Rational recursive = d_recursive(n, x, table);
      Rational closed = d_value(n, x, Method::Auto);
      Rational chain = exact_chain_probability(n, x);
      if (recursive != closed || closed != chain) {
        pass = false;
        witness = "n=" + std::to_string(n) + " x=" + fraction_string(x);
        break;
      }
    }
  }
  report(1, "three-route exactness, n <= 20", pass, witness);
}

// 2. d_value(n, k) = b_tail(n, k) = Rademacher tail expression, n <= 30.
void criterion_integer_identity() {
  bool pass = true;
  for (int n = 0; n <= 30 && pass; ++n) {
    for (int k = 0; k <= n; ++k) {
      Rational tail = 2 * rademacher_tail(n, k + 1);
      if ((n + k) % 2 == 0) tail += rademacher_tail(n, k) - rademacher_tail(n, k + 1);
      if (d_value(n, Rational(k)) != b_tail(n, k) || b_tail(n, k) != tail) {
        pass = false;
        break;
      }
    }
  }
  report(2, "integer-level identity, n <= 30", pass);
}

// 3. Pinned values through recursion, closed form and the envelope oracle.
void criterion_pinned_values(const EnvelopeOracle& oracle) {
  struct Pin {
    int n;
    Rational x;
    Rational value;
  };
  std::vector<Pin> pins{{1, Rational(1, 2), Rational(2, 3)},
                        {2, Rational(1, 2), Rational(3, 4)},
                        {2, Rational(3, 2), Rational(1, 3)},
                        {3, Rational(1, 2), Rational(7, 9)},
                        {3, Rational(3, 2), Rational(5, 12)}};
  for (int n = 1; n <= 10; ++n) pins.push_back({n, Rational(n), Rational(1, Int(1) << n)});

  bool pass = true;
  std::string witness;
  for (const Pin& pin : pins) {
    bool exact = d_value(pin.n, pin.x, Method::Recursion) == pin.value &&
                 d_value(pin.n, pin.x, Method::Closed) == pin.value;
    double gap = std::fabs(oracle.value(pin.n, to_double(pin.x)) - to_double(pin.value));
    if (!exact || gap > 1e-2) {
      pass = false;
      witness = "n=" + std::to_string(pin.n) + " x=" + fraction_string(pin.x) +
                " envelope-gap=" + std::to_string(gap);
      break;
    }
  }
  report(3, "pinned values via three routes", pass, witness);
}

// 4. |envelope(n, x) - d_value(n, x)| <= 1e-2 for n <= 8 on the grid.
void criterion_envelope_agreement(const EnvelopeOracle& oracle) {
  BoundTable table;
  double worst = 0;
  for (int n = 0; n <= 8; ++n) {
    for (const Rational& x : standard_grid(n)) {
      double gap = std::fabs(oracle.value(n, to_double(x)) - to_double(d_recursive(n, x, table)));
      worst = std::max(worst, gap);
    }
  }
  char detail[48];
  std::snprintf(detail, sizeof(detail), "worst gap %.3g", worst);
  report(4, "envelope oracle agreement, n <= 8", worst <= 1e-2, detail);
}

// 5. Terminal-sum optimum equals running-max optimum, neither exceeds d_value.
void criterion_stopping_equivalence() {
  bool pass = true;
  std::string witness;
  for (int n = 1; n <= 4 && pass; ++n) {
    for (int j = 1; j <= 4 * n; ++j) {
      Rational x(j, 4);
      Rational alpha = frac_part(x);
      std::vector<Rational> candidates{1,          -1,          Rational(1, 2), Rational(-1, 2),
                                       Rational(1, 4), Rational(-1, 4)};
      if (alpha != 0)
        candidates.insert(candidates.end(), {alpha, -alpha, 1 - alpha, alpha - 1});
      Rational terminal = brute_force_strategy_sup(n, x, candidates, Objective::Terminal);
      Rational running = brute_force_strategy_sup(n, x, candidates, Objective::RunningMax);
      if (terminal != running || running > d_value(n, x)) {
        pass = false;
        witness = "n=" + std::to_string(n) + " x=" + fraction_string(x);
        break;
      }
    }
  }
  report(5, "stopping equivalence at desk scale, n <= 4", pass, witness);
}

// 6. Monte Carlo with 1e6 paths lands within 4 standard errors.
void criterion_monte_carlo() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  struct Case {
    long n;
    Rational x;
  };
  bool pass = true;
  std::string witness;
  for (const Case& c : {Case{2, Rational(1, 2)}, Case{3, Rational(3, 2)}, Case{8, Rational(3)},
                        Case{9, Rational(7, 2)}}) {
    McEstimate mc = monte_carlo_estimate(c.n, c.x, 1000000, 20240817, threads);
    double target = to_double(d_value(static_cast<int>(c.n), c.x));
    if (std::fabs(mc.estimate - target) > 4 * mc.standard_error) {
      pass = false;
      witness = "n=" + std::to_string(c.n) + " x=" + fraction_string(c.x) + " est=" +
                std::to_string(mc.estimate);
      break;
    }
  }
  report(6, "Monte Carlo consistency, 1e6 paths", pass, witness);
}

// 7. Hoeffding domination on all grids, n <= 25.
void criterion_hoeffding() {
  BoundTable table;
  bool pass = true;
  std::string witness;
  for (int n = 1; n <= 25 && pass; ++n) {
    for (const Rational& x : standard_grid(n)) {
      if (x <= 0 || x > n) continue;
      if (to_double(d_recursive(n, x, table)) > hoeffding_bound(n, x) + 1e-12) {
        pass = false;
        witness = "n=" + std::to_string(n) + " x=" + fraction_string(x);
        break;
      }
    }
  }
  report(7, "Hoeffding domination, n <= 25", pass, witness);
}

// 8. Analytic lemma suites for n <= 15.
void criterion_analysis() {
  bool pass = true;
  std::string witness;
  for (int n = 2; n <= 15 && pass; ++n) {
    for (const PropertyReport& r :
         {check_piecewise_convexity(n, Rational(1, 16)), check_c1_junctions(n),
          check_dnelyg_inequalities(n, Rational(1, 16)),
          check_global_shape(n, Rational(1, 8))}) {
      if (!r.pass) {
        pass = false;
        witness = r.property + " n=" + std::to_string(n);
        break;
      }
    }
  }
  report(8, "analytic lemma suites, n <= 15", pass, witness);
}

ConditionalStep random_supermartingale_step(std::uint64_t seed, std::uint64_t index) {
  ConditionalStep step;
  step.step_class = StepClass::SuperMartingale;
  int size = 2 + static_cast<int>(counter_word(seed, index, 0) % 3);
  Rational total = 0;
  for (int i = 0; i < size; ++i) {
    Rational v(static_cast<long long>(counter_word(seed, index, 10 + i) % 2001) - 1000, 1000);
    Rational w(static_cast<long long>(counter_word(seed, index, 100 + i) % 97) + 1);
    step.support.emplace_back(v, w);
    total += w;
  }
  for (auto& [v, p] : step.support) p /= total;
  if (step.mean() > 0)
    for (auto& [v, p] : step.support) v = -v;
  return step;
}

// 9. Compensator transform invariants plus tail domination on depth-3 trees.
void criterion_supermartingale() {
  bool pass = true;
  std::string witness;
  for (std::uint64_t i = 0; i < 1000 && pass; ++i) {
    ConditionalStep in = random_supermartingale_step(91, i);
    ConditionalStep out = supermartingale_compensator(in);
    if (out.mean() != 0) pass = false;
    for (size_t j = 0; j < out.support.size(); ++j) {
      const Rational& v = out.support[j].first;
      if (v < -1 || v > 1 || v < in.support[j].first) pass = false;
    }
    if (!pass) witness = "step " + std::to_string(i);
  }
  for (std::uint64_t tree = 0; tree < 25 && pass; ++tree) {
    struct Leaf {
      Rational original, compensated, probability;
    };
    std::vector<Leaf> leaves{{0, 0, 1}};
    std::uint64_t node = 0;
    for (int depth = 0; depth < 3; ++depth) {
      std::vector<Leaf> next;
      for (const Leaf& leaf : leaves) {
        ConditionalStep step = random_supermartingale_step(1000 + tree, node++);
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
      Rational original = 0, compensated = 0;
      for (const Leaf& leaf : leaves) {
        if (leaf.original >= x) original += leaf.probability;
        if (leaf.compensated >= x) compensated += leaf.probability;
      }
      if (compensated < original) {
        pass = false;
        witness = "tree " + std::to_string(tree) + " x=" + fraction_string(x);
        break;
      }
    }
  }
  report(9, "super-martingale compensator transform", pass, witness);
}

int run_command(const std::string& command) {
  int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 10. Injected defects must make `verify --suite all` exit 2.
void criterion_mutation_sensitivity(const std::string& cli) {
  std::string base = cli + " verify --suite all --n-max 6 --out /dev/null";
  int clean = run_command(base);
  int printed = run_command(base + " --mutate bnk-printed");
  int swapped = run_command(base + " --mutate swap-p3q3");
  bool pass = clean == 0 && printed == 2 && swapped == 2;
  report(10, "mutation sensitivity of verify --suite all", pass,
         "exit codes clean=" + std::to_string(clean) + " bnk-printed=" + std::to_string(printed) +
             " swap-p3q3=" + std::to_string(swapped));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-maxvisit-cli>\n";
    return 2;
  }
  criterion_three_route_exactness();
  criterion_integer_identity();
  EnvelopeOracle oracle(10, 1e-3, 11.0);
  criterion_pinned_values(oracle);
  criterion_envelope_agreement(oracle);
  criterion_stopping_equivalence();
  criterion_monte_carlo();
  criterion_hoeffding();
  criterion_analysis();
  criterion_supermartingale();
  criterion_mutation_sensitivity(argv[1]);
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
            << std::endl;
  return failures == 0 ? 0 : 1;
}
