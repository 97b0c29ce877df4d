#include <doctest.h>

#include "conesum/cycles.hpp"
#include "conesum/summation.hpp"

using namespace conesum;

TEST_CASE("boundary of a boundary vanishes") {
  Cycle s = simplex_cycle({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(s.degree == 2);
  CHECK(is_cycle(s));
  Space S = Space::standard(4);
  auto K = make_polyhedron(S, {{1, 0, 0, 1}, {-1, 0, 0, 1}, {0, 1, 0, 1}, {0, -1, 0, 1}, {0, 0, 1, 1}, {0, 0, -1, 1}});
  Cycle z = boundary_cycle(S, K);
  CHECK(is_cycle(z));
  CHECK(boundary(z).is_zero());
}

TEST_CASE("dependent points give the zero simplex") {
  CHECK(simplex_cycle({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}).is_zero());
}

TEST_CASE("simplex boundary cycle carries the orientation sign") {
  Space S = Space::standard(3);
  std::vector<QVec> A{{1, 2, 0}, {0, 1, 3}, {1, 1, 1}};
  auto K = make_polyhedron(S, A);
  CHECK(boundary_cycle(S, K) == Rational(sgn(det(A))) * simplex_cycle(A));
}

TEST_CASE("duality of polyhedral cycles") {
  Space S = Space::standard(3);
  CHECK(theorem2_check(S, make_polyhedron(S, {{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}})));
  CHECK(theorem2_check(S, make_polyhedron(S, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  auto F = TotallyRealField::make({-3, 0, 1});
  Space SF = Space::of_field(F);
  CHECK(theorem2_check(SF, make_polyhedron(SF, {{1, 0}, {2, 1}})));
}

TEST_CASE("cpd extension of h on a simplex is h") {
  Space S = Space::standard(3);
  std::vector<QVec> A{{2, 1, 0}, {0, 1, 1}, {1, 0, 3}};
  QVec x{1, 1, 1};
  auto v = cpd_extend(simplex_cycle(A), [&](const std::vector<QVec>& P) { return h(S, P, x); }, ScaledRational::zero(S.D));
  CHECK(v == h(S, A, x));
}

TEST_CASE("cycle json round trip") {
  Cycle s = simplex_cycle({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(cycle_from_json(to_json(s)) == s);
}
