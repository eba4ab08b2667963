#pragma once

#include "maxvisit/rational.hpp"

#include <string>
#include <vector>

namespace maxvisit {

struct SuiteResult {
  std::string suite;
  bool pass = false;
  double worst_violation = 0;
  std::vector<std::string> witnesses;
};

// The x-grid used throughout verification: {j/q : q in {2,3,4,7,8,16}},
// intersected with [0, n+1], sorted and deduplicated.
std::vector<Rational> standard_grid(int n);

// Suite names: closed-vs-recursion, chain, envelope, hoeffding, analysis,
// supermartingale, stopping. Unknown names throw std::invalid_argument.
SuiteResult run_suite(const std::string& name, int n_max, unsigned threads = 1);

std::vector<std::string> all_suite_names();

}  // namespace maxvisit
