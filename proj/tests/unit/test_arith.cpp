#include <doctest.h>

#include <cmath>

#include "conesum/arith.hpp"
#include "conesum/summation.hpp"

using namespace conesum;

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(6) == Rational(1, 42));
  CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("module discriminant") {
  auto M = example_module();
  validate_module(M);
  ScaledRational d = d_M(M);
  CHECK(d == ScaledRational(Rational(1, 3), 1, 12));
}

TEST_CASE("a unit that does not preserve the module") {
  auto M = example_module();
  M.basis = {{1, 0}, {0, 3}};  // Z + 3 sqrt3 Z is not stable under 2 + sqrt3
  try {
    validate_module(M);
    FAIL("expected UnitDoesNotPreserveM");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnitDoesNotPreserveM);
  }
}

TEST_CASE("intersection data from the b-cycle") {
  auto M = example_module();
  auto fan = build_quadratic_fan(Space::of_field(M.F), M.basis, M.V.generators[0]);
  auto I = quadratic_intersections(*fan.seq);
  CHECK(I.entries == example_intersections()[0].entries);

  Space S5 = Space::of_field(TotallyRealField::make({-1, -1, 1}));
  auto f5 = build_quadratic_fan(S5, {{1, 0}, {0, 1}}, {1, 1});
  auto split = quadratic_intersections(*f5.seq, PeriodOneConvention::SplitNode);
  auto nodal = quadratic_intersections(*f5.seq, PeriodOneConvention::Nodal);
  CHECK(split.entries.at({2}) == -3);
  CHECK(split.cross_nodes == 1);
  CHECK(nodal.entries.at({2}) == -1);
}

TEST_CASE("satake evaluations") {
  for (const auto& c : verify_satake_example()) {
    CHECK(c.bracket == c.termwise_bracket);
    CHECK(c.value.coeff == c.expected);
    CHECK(c.value.pi_power == 2 * c.s);
    CHECK(c.exact_match);
  }
}

TEST_CASE("missing intersection entry") {
  auto data = example_intersections()[0];
  data.entries.erase({1, 1});
  try {
    satake_rhs(data, d_M(example_module()));
    FAIL("expected MissingIntersectionEntry");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingIntersectionEntry);
  }
}

TEST_CASE("numeric L-value at s = 2") {
  auto M = example_module();
  auto L = lvalue_numeric(M, 2, 10000);
  double target = std::pow(M_PI, 4) * std::sqrt(3.0) / 6;
  CHECK(std::abs(L.value - target) < 1e-6);
  CHECK(L.estimate < 1e-5);
  CHECK(L.terms > 0);
}

TEST_CASE("cutoff too small") {
  try {
    lvalue_numeric(example_module(), 2, 1);
    FAIL("expected CutoffTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CutoffTooSmall);
  }
}
