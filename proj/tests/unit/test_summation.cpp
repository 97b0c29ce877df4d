#include <doctest.h>

#include "conesum/summation.hpp"

using namespace conesum;

namespace {

Space sqrt3() { return Space::of_field(TotallyRealField::make({-3, 0, 1})); }
const std::vector<QVec> kM{{1, 0}, {0, Rational(1, 3)}};

}  // namespace

TEST_CASE("h and h* on a basis") {
  Space S = sqrt3();
  std::vector<QVec> A{{1, 0}, {0, 1}};
  // det = sqrt12 / 2 in the trace form normalization; <1,1> = 2, <1, sqrt3> = 0
  CHECK_THROWS_AS(h(S, A, {1, 0}), Error);
  ScaledRational v = h(S, A, {2, 1});
  CHECK(v.e() == 1);
  CHECK_FALSE(v.is_zero());
  CHECK(h(S, {{1, 0}, {2, 0}}, {2, 1}).is_zero());
  CHECK_THROWS_AS(h_star(S, {{1, 0}, {1, 1}}, {1, 0}), Error);
  ScaledRational w = h_star(S, {{1, 0}, {1, 1}}, {2, 1});
  CHECK(w.e() == -1);
  CHECK(w == h(S, dual_basis(S, {{1, 0}, {1, 1}}), {2, 1}));
}

TEST_CASE("alternating sum of h vanishes") {
  Space S = Space::standard(3);
  std::vector<QVec> P{{1, 2, 0}, {0, 1, 1}, {3, 0, 1}, {1, 1, 1}};
  QVec x{2, 3, 5};
  ScaledRational acc = ScaledRational::zero(1), acc_star = ScaledRational::zero(1);
  for (size_t i = 0; i < P.size(); ++i) {
    std::vector<QVec> A;
    for (size_t k = 0; k < P.size(); ++k)
      if (k != i) A.push_back(P[k]);
    acc += (i % 2 ? -h(S, A, x) : h(S, A, x));
    acc_star += (i % 2 ? -h_star(S, A, x) : h_star(S, A, x));
  }
  CHECK(acc.is_zero());
  CHECK(acc_star.is_zero());
}

TEST_CASE("partial sums agree with the dual cycle evaluation") {
  Space S = sqrt3();
  auto fan = build_quadratic_fan(S, kM, {2, 1});
  for (long N = 1; N <= 4; ++N) {
    auto tf = quadratic_window(fan, N);
    CHECK(sum_via_dual_cycle(S, kM, tf.top(), {5, 1}) == partial_sum(tf, {5, 1}).partial_sum);
  }
  CHECK(partial_sum(quadratic_window(fan, 3), {3, 1}).partial_sum == ScaledRational(Rational(5, 8), -1, 12));
}

TEST_CASE("convergence to 1/N(x0)") {
  Space S = sqrt3();
  auto fan = build_quadratic_fan(S, kM, {2, 1});
  auto rows = converge(fan, {3, 1}, 12, 0);
  CHECK(rows.front().target == Rational(1, 6));
  CHECK_FALSE(rows.front().defined);  // x0 on the boundary ray of the N = 1 window
  CHECK(rows[10].abs_error < 1e-6);  // N = 11
  for (size_t i = 2; i < rows.size(); ++i) CHECK(rows[i].abs_error < rows[i - 1].abs_error);
}

TEST_CASE("singular points are summed by stars") {
  Space S = sqrt3();
  auto fan = build_quadratic_fan(S, kM, {2, 1});
  auto rows = converge(fan, {1, 0}, 12, 0);
  for (const auto& r : rows) CHECK(r.defined);
  CHECK(rows.back().abs_error < 1e-6);
  auto groups = group_singular_terms({1, 0}, quadratic_window(fan, 2));
  size_t stars = 0;
  for (const auto& g : groups) stars += g.singular.has_value();
  CHECK(stars == 1);
}

TEST_CASE("non totally positive x0 is rejected") {
  auto fan = build_quadratic_fan(sqrt3(), kM, {2, 1});
  CHECK_THROWS_AS(converge(fan, {1, 1}, 4, 0), Error);
}

TEST_CASE("hurwitz chart value equals h") {
  Space S = Space::standard(3);
  std::vector<QVec> A{{1, 0, 0}, {0, 1, 0}, {1, 1, 2}};
  QVec x{5, 1, 2};
  auto r = hurwitz_area(S, A, x, 200000);
  CHECK(r.exact_chart == doctest::Approx(h(S, A, x).to_double()).epsilon(1e-12));
  CHECK(std::abs(r.estimate - r.exact_chart) < 1e-2);
}
