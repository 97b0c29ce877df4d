#include <doctest.h>

#include "conesum/geometry.hpp"
#include "conesum/lp.hpp"

using namespace conesum;

TEST_CASE("polyhedron facets and duals") {
  Space S = Space::standard(3);
  auto K = make_polyhedron(S, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  CHECK(K.vertices().size() == 3);  // (1,1,1) is interior
  CHECK(facets(S, K.cone).size() == 3);

  auto Q = make_polyhedron(S, {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}});
  CHECK(Q.vertices().size() == 4);
  CHECK(facets(S, Q.cone).size() == 4);
  auto D = dual_polyhedron(S, Q);
  auto D2 = dual_polyhedron_via_facets(S, Q);
  CHECK(D.vertices().size() == 4);
  CHECK(D.vertices() == D2.vertices());
  CHECK(cone_contains(S, Q.cone, {2, 1, 1}));
  CHECK_FALSE(cone_contains(S, Q.cone, {1, 2, 0}));
  CHECK_FALSE(cone_interior(S, Q.cone, {1, 1, 0}));
  CHECK(vertex_hyperplane(S, Q, {1, 0, 0}).dim() == 2);
}

TEST_CASE("facets of a square") {
  Space S = Space::standard(3);
  auto sq = make_polyhedron(S, {{1, 1, 1}, {-1, 1, 1}, {-1, -1, 1}, {1, -1, 1}});
  auto fs = faces(S, sq);
  CHECK(fs.size() == 4);
  for (const auto& [f, L] : fs) {
    CHECK(f.proj_dim() == 1);
    CHECK(L.dim() == 2);
  }
}

TEST_CASE("primitive generators and lattice coordinates") {
  std::vector<QVec> M{{1, 0}, {0, Rational(1, 3)}};
  CHECK(primitive_generator({2, 1}, M) == QVec{2, 1});
  CHECK(primitive_generator({6, 1}, M) == QVec{2, Rational(1, 3)});
  CHECK(primitive_generator({3, 1}, M) == QVec{1, Rational(1, 3)});
  CHECK(primitive_generator({Rational(1, 2), Rational(1, 6)}, M) == QVec{1, Rational(1, 3)});
  CHECK(lattice_coords({1, 1}, M) == QVec{1, 3});
  CHECK_THROWS_AS(primitive_generator({0, 0}, M), Error);
}

TEST_CASE("exact feasibility") {
  // x + y >= 1, x >= 0, y >= 0, x + y = 1/2 is infeasible
  CHECK_FALSE(lp::feasible({{1, 1}, {1, 0}, {0, 1}}, {1, 0, 0}, {{1, 1}}, {Rational(1, 2)}, 2).has_value());
  CHECK(lp::feasible({{1, 1}, {1, 0}, {0, 1}}, {1, 0, 0}, {{1, -1}}, {0}, 2).has_value());
}
