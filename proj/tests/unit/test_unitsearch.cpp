#include <doctest.h>

#include <cmath>

#include "conesum/unitsearch.hpp"

using namespace conesum;

namespace {

struct Cubic {
  FieldPtr F = TotallyRealField::make({1, -2, -1, 1});
  UnitGroupData V;
  Cubic() {
    FieldElement t1 = F->theta();
    t1[0] += 1;
    V.generators = {F->mul(F->theta(), F->theta()), F->mul(t1, t1)};
  }
};

}  // namespace

TEST_CASE("search finds the first admissible set") {
  Cubic c;
  auto cand = search_admissible(*c.F, c.V, 2, 9, 7);
  CHECK(cand.exponents == std::vector<std::vector<long>>{{-3, 6}, {7, -1}, {-5, -3}});
  CHECK(check_lemma3(*c.F, cand).pass());
  CHECK(check_admissible(*c.F, cand.units).pass());
}

TEST_CASE("search radius too small") {
  Cubic c;
  try {
    search_admissible(*c.F, c.V, 2, 9, 6);
    FAIL("expected NotFound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFound);
  }
}

TEST_CASE("quadratic fields are rejected") {
  auto F = TotallyRealField::make({-3, 0, 1});
  UnitGroupData V{{{2, 1}}};
  try {
    search_admissible(*F, V, 2, 9, 3);
    FAIL("expected DegreeTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeTooSmall);
  }
}

TEST_CASE("hull charts") {
  Cubic c;
  auto cand = search_admissible(*c.F, c.V, 2, 9, 7);
  for (size_t j = 0; j < 3; ++j) {
    auto ch = hull_chart(*c.F, cand.units, j, 3);
    CHECK(ch.a.size() == 2);
    for (const auto& a : ch.a) CHECK(a.certainly_pos());
    CHECK(chart_residual(ch) < 1e-20);
    CHECK(verify_vertices(*c.F, cand.units, j, 3));
  }
}

TEST_CASE("sigma_N grows with N") {
  Cubic c;
  auto cand = search_admissible(*c.F, c.V, 2, 9, 7);
  FieldElement x = c.F->from_poly({2, 1});
  CHECK_FALSE(sigma_N_contains(*c.F, cand.units, 0, x, 8));
  for (long N = 1; N <= 6; ++N) CHECK(sigma_N_contains(*c.F, cand.units, N, x, 8));
  for (long N = 0; N <= 6; ++N) CHECK(sigma_N_contains(*c.F, cand.units, N, c.F->one(), 8));
}

TEST_CASE("convexity minors") {
  auto r = convexity_check({1, 1}, {{1, 1}, {2, 3}, {0.5, 2}});
  CHECK(r.all_minors_positive);
  CHECK(r.matches);
  CHECK(minor_closed_form({1, 1}, {1, 1}, 2) == doctest::Approx(minor_alt({1, 1}, {1, 1}, 2)));
  CHECK(minor_closed_form({2, 3}, {1.5, 0.5}, 1) == doctest::Approx(std::pow(1.5, -2) * std::pow(0.5, -3) * (2 / 2.25) * 3));
}
