#include <doctest.h>

#include "conesum/field.hpp"
#include "conesum/interval.hpp"
#include "conesum/space.hpp"
#include "conesum/summation.hpp"

using namespace conesum;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(parse_rational("2/6")) == "1/3");
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("scaled rationals reconcile sqrt(D) and 1/sqrt(D)") {
  ScaledRational a(Rational(1, 2), 1, 12), b(6, -1, 12);
  CHECK(a == b);
  CHECK((a - b).is_zero());
  CHECK((a * b).e() == 0);
  CHECK((a * b).q() == 3);
  CHECK(ScaledRational(1, 2, 12).e() == 0);
  CHECK(ScaledRational(1, 2, 12).q() == 12);
  CHECK(a.compare(Rational(17, 10)) > 0);  // sqrt(12)/2 = 1.732
  CHECK(a.compare(Rational(18, 10)) < 0);
  CHECK(a.to_double() == doctest::Approx(1.7320508075688772));
}

TEST_CASE("intervals are outward rounded") {
  Interval third(Rational(1, 3), 64);
  Interval three(Rational(3), 64);
  Interval one = third * three;
  CHECK(one.contains_zero() == false);
  CHECK(one.lo_d() <= 1.0);
  CHECK(one.hi_d() >= 1.0);
  Interval l = Interval(Rational(2), 128).log();
  CHECK(l.lo_d() <= 0.6931471805599453);
  CHECK(l.hi_d() >= 0.6931471805599453);
  CHECK(l.certainly_pos());
}

TEST_CASE("quadratic and cubic fields") {
  auto F = TotallyRealField::make({-3, 0, 1});
  CHECK(F->degree() == 2);
  CHECK(F->disc_abs() == 12);
  FieldElement e{2, 1};
  CHECK(F->norm(e) == 1);
  CHECK(F->is_unit(e));
  CHECK(F->is_totally_positive(e));
  CHECK(F->mul(e, F->inv(e)) == F->one());
  CHECK(F->pow(e, -2) == F->mul(F->inv(e), F->inv(e)));
  CHECK(F->trace(e) == 4);
  CHECK(fundamental_unit_quadratic(3) == e);
  CHECK(fundamental_unit_quadratic(2) == FieldElement{3, 2});

  auto C = TotallyRealField::make({1, -2, -1, 1});
  CHECK(C->disc_abs() == 49);
  CHECK(C->norm(C->theta()) == -1);
  CHECK_FALSE(C->is_totally_positive(C->theta()));
  CHECK(C->is_totally_positive(C->mul(C->theta(), C->theta())));
  auto emb = C->embed(C->theta(), 60);
  double sum = 0;
  for (const auto& r : emb) sum += Rational((r.lo + r.hi) / 2).get_d();
  CHECK(sum == doctest::Approx(1.0));  // trace of theta
}

TEST_CASE("field construction errors") {
  auto code = [](std::vector<Integer> p) {
    try {
      TotallyRealField::make(p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  CHECK(code({1, 0, 1}) == ErrorCode::NotTotallyReal);
  CHECK(code({-4, 0, 1}) == ErrorCode::NotIrreducible);
  CHECK(code({1, -2, 1}) == ErrorCode::DegenerateRoots);
}

TEST_CASE("limit pair of a unit") {
  auto F = TotallyRealField::make({-3, 0, 1});
  auto [lo, hi] = limit_pair(*F, {2, 1});
  REQUIRE(lo.size() == 1);
  REQUIRE(hi.size() == 1);
  CHECK(lo[0] != hi[0]);
  CHECK_THROWS_AS(limit_pair(*F, {1, 1}), Error);
}

TEST_CASE("determinant and dual basis identities") {
  auto F = TotallyRealField::make({1, -2, -1, 1});
  Space S = Space::of_field(F);
  std::vector<QVec> A{{1, 2, 0}, {0, 1, -1}, {3, 0, 1}};
  ScaledRational d = S.det_scaled(A);
  QMatrix gram(3, QVec(3));
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) gram[i][j] = S.pair(A[i], A[j]);
  CHECK(det(gram) == d.q() * d.q() * S.D);
  auto B = dual_basis(S, A);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) CHECK(S.pair(A[i], B[j]) == (i == j ? 1 : 0));
}
