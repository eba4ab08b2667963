#include "maxvisit/analysis.hpp"
#include "maxvisit/bounds.hpp"

#include <doctest.h>

using namespace maxvisit;

TEST_CASE("piecewise convexity") {
  for (int n = 2; n <= 8; ++n) {
    PropertyReport report = check_piecewise_convexity(n, Rational(1, 16));
    CHECK(report.pass);
    CHECK(report.worst_violation == 0);
  }
}

TEST_CASE("c1 junctions") {
  for (int n : {2, 3, 5, 8}) {
    PropertyReport report = check_c1_junctions(n);
    CHECK(report.pass);
    CHECK(report.worst_violation <= 1e-3);
  }
}

TEST_CASE("dominating-line inequalities hold exactly") {
  for (int n = 0; n <= 8; ++n) {
    PropertyReport report = check_dnelyg_inequalities(n, Rational(1, 16));
    CHECK(report.pass);
  }
}

TEST_CASE("lemma inequality spot checks") {
  // (a) at n = 1, x = 1/2.
  Rational lhs_a = Rational(1, 2) * d_value(1, 0) + Rational(1, 2) * d_value(1, 1) -
                   Rational(2, 3) * d_value(1, 0) - Rational(1, 3) * d_value(1, Rational(3, 2));
  CHECK(lhs_a == Rational(1, 12));
  CHECK(lhs_a >= 0);
  // (c) at n = 2, x = 3/2.
  Rational lhs_c = Rational(1, 3) * d_value(2, Rational(1, 2)) +
                   Rational(2, 3) * d_value(2, 2) - Rational(1, 2) * d_value(2, Rational(1, 2)) -
                   Rational(1, 2) * d_value(2, Rational(5, 2));
  CHECK(lhs_c == Rational(1, 24));
}

TEST_CASE("global shape") {
  for (int n = 0; n <= 8; ++n) {
    PropertyReport report = check_global_shape(n, Rational(1, 8));
    CHECK(report.pass);
  }
  CHECK(d_value(5, -1) == 1);
  CHECK(d_value(5, Rational(5001, 1000)) == 0);
  CHECK(d_value(5, 5) == Rational(1, 32));
}

TEST_CASE("hoeffding comparison") {
  for (int n : {1, 4, 8}) {
    PropertyReport report = compare_hoeffding(n, Rational(1, 4));
    CHECK(report.pass);
  }
}
