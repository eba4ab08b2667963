#pragma once

#include "maxvisit/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace maxvisit {

struct PropertyReport {
  std::string property;
  std::string grid;
  double worst_violation = 0;
  bool pass = false;
  std::vector<std::pair<int, std::string>> witnesses;  // (n, x) at extremes
};

// Second central differences of D_n are >= 0 on each parity interval
// (n-2, n), (n-4, n-2), ...; exact rational check.
PropertyReport check_piecewise_convexity(int n, const Rational& grid_step);

// One-sided difference quotients at integer junctions m (n + m odd) agree
// within 1e-3 and match the exact slope D_{n-1}(m) - D_{n-1}(m-1).
PropertyReport check_c1_junctions(int n);

// The three dominating-line inequalities, exact at all applicable grid points.
PropertyReport check_dnelyg_inequalities(int n, const Rational& grid_step);

// Monotone in x, 1 on x <= 0, 0 beyond n, jump of height 2^-n at x = n,
// nondecreasing in n.
PropertyReport check_global_shape(int n, const Rational& grid_step);

// D_n(x) <= exp(-x^2/2n) + 1e-12 on the grid; also reports the worst ratio.
PropertyReport compare_hoeffding(int n, const Rational& grid_step);

}  // namespace maxvisit
