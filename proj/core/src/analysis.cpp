#include "maxvisit/analysis.hpp"

#include "maxvisit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace maxvisit {

namespace {

constexpr double kSlopeTolerance = 1e-3;
constexpr double kHoeffdingSlack = 1e-12;

void note_violation(PropertyReport& report, double magnitude, int n, const Rational& x) {
  if (magnitude > report.worst_violation) {
    report.worst_violation = magnitude;
    report.witnesses.clear();
    report.witnesses.emplace_back(n, fraction_string(x));
  }
}

std::string describe_grid(int n, const Rational& step) {
  std::ostringstream os;
  os << "n=" << n << " step=" << fraction_string(step);
  return os.str();
}

}  // namespace

PropertyReport check_piecewise_convexity(int n, const Rational& grid_step) {
  PropertyReport report{"piecewise-convexity", describe_grid(n, grid_step)};
  BoundTable table;
  for (int upper = n; upper > 0; upper -= 2) {
    Rational lo = std::max(upper - 2, 0);
    Rational hi = upper;
    for (Rational x = lo + grid_step; x < hi; x += grid_step) {
      if (x - grid_step <= lo || x + grid_step >= hi) continue;
      Rational second = d_recursive(n, x - grid_step, table) - 2 * d_recursive(n, x, table) +
                        d_recursive(n, x + grid_step, table);
      if (second < 0) note_violation(report, to_double(-second), n, x);
    }
  }
  report.pass = report.worst_violation == 0;
  return report;
}

PropertyReport check_c1_junctions(int n) {
  PropertyReport report{"c1-junctions", describe_grid(n, Rational(1, 4096))};
  BoundTable table;
  for (int m = 1; m < n; ++m) {
    if ((n + m) % 2 == 0) continue;  // junctions sit at n + m odd, x = n excluded
    Rational xm = m;
    Rational dm = d_recursive(n, xm, table);

    // Richardson-extrapolated one-sided quotients at steps 2^-j.
    auto quotient = [&](int j, int side) {
      Rational h = Rational(1, Int(1) << static_cast<unsigned>(j));
      Rational q = side > 0 ? (d_recursive(n, xm + h, table) - dm) / h
                            : (dm - d_recursive(n, xm - h, table)) / h;
      return to_double(q);
    };
    double left = 2 * quotient(12, -1) - quotient(11, -1);
    double right = 2 * quotient(12, +1) - quotient(11, +1);

    Rational exact_slope = d_recursive(n - 1, xm, table) - d_recursive(n - 1, xm - 1, table);
    double target = to_double(exact_slope);

    // The proof's identity: D_{n-1} is linear across m when (n-1) + m is even.
    Rational balance = d_recursive(n - 1, xm - 1, table) + d_recursive(n - 1, xm + 1, table) -
                       2 * d_recursive(n - 1, xm, table);
    double violation = std::max({std::fabs(left - right), std::fabs(left - target),
                                 std::fabs(right - target), std::fabs(to_double(balance))});
    if (violation > 0) note_violation(report, violation, n, xm);
  }
  report.pass = report.worst_violation <= kSlopeTolerance;
  return report;
}

PropertyReport check_dnelyg_inequalities(int n, const Rational& grid_step) {
  PropertyReport report{"dominating-line-inequalities", describe_grid(n, grid_step)};
  BoundTable table;
  auto d = [&](const Rational& x) { return d_recursive(n, x, table); };

  for (Rational x = grid_step; x <= n + 1; x += grid_step) {
    if (is_integer(x)) continue;
    Rational alpha = frac_part(x);
    Rational half(1, 2);

    if (n % 2 == 1 && x < 1) {
      // (a): the small-step choice dominates the case-(iii) choice.
      Rational lhs = (1 - x) * d(0) + x * d(1) - d(0) / (1 + x) - x / (1 + x) * d(x + 1);
      if (lhs < 0) note_violation(report, to_double(-lhs), n, x);
    }
    Int floor_nx = floor_int(x + n);
    if (floor_nx % 2 == 0) {
      // (b): case-(iii) choice dominates the simple-walk choice.
      Rational lhs = d(Rational(floor_int(x))) / (1 + alpha) + alpha / (1 + alpha) * d(x + 1) -
                     half * d(x - 1) - half * d(x + 1);
      if (lhs < 0) note_violation(report, to_double(-lhs), n, x);
    } else if (x > 1) {
      // (c): case-(iv) choice dominates the simple-walk choice.
      Rational lhs = (1 - alpha) / (2 - alpha) * d(x - 1) +
                     d(Rational(floor_int(x) + 1)) / (2 - alpha) - half * d(x - 1) -
                     half * d(x + 1);
      if (lhs < 0) note_violation(report, to_double(-lhs), n, x);
    }
  }
  report.pass = report.worst_violation == 0;
  return report;
}

PropertyReport check_global_shape(int n, const Rational& grid_step) {
  PropertyReport report{"global-shape", describe_grid(n, grid_step)};
  BoundTable table;
  Rational previous = 2;  // above any probability
  for (Rational x = -1; x <= n + 1; x += grid_step) {
    Rational value = d_recursive(n, x, table);
    if (value > previous) note_violation(report, to_double(value - previous), n, x);
    previous = value;
    if (x <= 0 && value != 1) note_violation(report, 1.0, n, x);
    if (x > n && value != 0) note_violation(report, 1.0, n, x);
    if (n >= 1) {
      Rational shorter = d_recursive(n - 1, x, table);
      if (value < shorter) note_violation(report, to_double(shorter - value), n, x);
    }
  }
  Rational at_n = d_recursive(n, Rational(n), table);
  if (at_n != Rational(1, Int(1) << static_cast<unsigned>(n)))
    note_violation(report, to_double(at_n), n, Rational(n));
  report.pass = report.worst_violation == 0;
  return report;
}

PropertyReport compare_hoeffding(int n, const Rational& grid_step) {
  PropertyReport report{"hoeffding-domination", describe_grid(n, grid_step)};
  BoundTable table;
  double worst_ratio = 0;
  for (Rational x = grid_step; x <= n; x += grid_step) {
    double exact = to_double(d_recursive(n, x, table));
    double hoeffding = hoeffding_bound(n, x);
    double excess = exact - hoeffding;
    if (excess > kHoeffdingSlack) note_violation(report, excess, n, x);
    if (hoeffding > 0) worst_ratio = std::max(worst_ratio, exact / hoeffding);
  }
  std::ostringstream os;
  os << report.grid << " max-ratio=" << worst_ratio;
  report.grid = os.str();
  report.pass = report.worst_violation == 0;
  return report;
}

}  // namespace maxvisit
