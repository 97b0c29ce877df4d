#include <doctest.h>

#include "conesum/fan.hpp"

using namespace conesum;

namespace {

Space sqrt3() { return Space::of_field(TotallyRealField::make({-3, 0, 1})); }
const std::vector<QVec> kM{{1, 0}, {0, Rational(1, 3)}};

}  // namespace

TEST_CASE("vertex sequence of the sqrt3 module") {
  auto fan = build_quadratic_fan(sqrt3(), kM, {2, 1});
  REQUIRE(fan.seq);
  CHECK(fan.seq->m() == 2);
  CHECK(fan.seq->b == std::vector<long>{2, 3});
  // A_{k-1} + A_{k+1} = b_k A_k along the whole sequence
  auto F = fan.S.field;
  for (long k = -3; k <= 3; ++k) {
    long b = fan.seq->b[((k % 2) + 2) % 2];
    CHECK(fan.seq->at(*F, k - 1) + fan.seq->at(*F, k + 1) == Rational(b) * fan.seq->at(*F, k));
  }
}

TEST_CASE("period one for the golden unit squared") {
  Space S = Space::of_field(TotallyRealField::make({-1, -1, 1}));
  auto fan = build_quadratic_fan(S, {{1, 0}, {0, 1}}, {1, 1});
  CHECK(fan.seq->m() == 1);
  CHECK(fan.seq->b == std::vector<long>{3});
}

TEST_CASE("good fan properties on windows") {
  auto fan = build_quadratic_fan(sqrt3(), kM, {2, 1});
  for (long N : {1, 2, 3}) {
    auto tf = quadratic_window(fan, N);
    CHECK(tf.top().size() == size_t(2 * N));
    for (const auto& c : validate_good_fan(tf, fan.V)) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
  }
}

TEST_CASE("truncation by unit powers") {
  auto fan = build_quadratic_fan(sqrt3(), kM, {2, 1});
  CHECK(truncate(fan, 0).top().size() == 2);
  CHECK(truncate(fan, 1).top().size() == 6);
}

TEST_CASE("stars and links") {
  auto fan = build_quadratic_fan(sqrt3(), kM, {2, 1});
  auto tf = quadratic_window(fan, 2);
  ConeKey ray = cone_key({{1, 0}});
  CHECK(star(ray, tf).size() == 3);  // the ray and its two top cones
  CHECK(link(ray, tf).size() == 3);  // the zero cone and the two neighbouring rays
  CHECK(singular_cones({1, 0}, tf).size() == 1);
  CHECK(singular_cones({3, 1}, tf).size() == 1);
  CHECK(singular_cones({5, 1}, tf).empty());
}

TEST_CASE("ray insertion splits one cone per orbit") {
  auto fan = build_quadratic_fan(sqrt3(), kM, {2, 1});
  auto ref = refine_insert_ray(fan, {2, Rational(1, 3)});
  auto a = quadratic_window(fan, 2), b = quadratic_window(ref, 2);
  CHECK(b.top().size() > a.top().size());
  CHECK_THROWS_AS(refine_insert_ray(fan, {1, 0}), Error);
}

TEST_CASE("fan input errors") {
  CHECK_THROWS_AS(build_quadratic_fan(sqrt3(), kM, {1, 1}), Error);     // not a unit
  CHECK_THROWS_AS(build_quadratic_fan(sqrt3(), kM, {-2, 1}), Error);    // not totally positive
}
