#pragma once

#include <vector>

#include "conesum/space.hpp"

namespace conesum {

// A linear subspace keyed by the reduced echelon basis of its span.
struct LinearSubspace {
  QMatrix basis;

  static LinearSubspace span(const std::vector<QVec>& vecs);
  size_t dim() const { return basis.size(); }
  bool contains(const QVec& x) const;
  bool operator==(const LinearSubspace& o) const { return basis == o.basis; }
  bool operator<(const LinearSubspace& o) const { return basis < o.basis; }
};

struct Cone {
  std::vector<QVec> gens;  // ray-normalized extreme rays
  size_t dim = 0;

  bool simplicial() const { return gens.size() == dim; }
};

// Vectors nu in span(basis) with <nu, w> = 0 for all w in ws (a basis of that complement).
QMatrix orthogonal_in(const Space& S, const QMatrix& basis, const std::vector<QVec>& ws);

// Sign of det of the ordered basis vs relative to the ordered basis O of the same subspace.
int orientation_sign(const std::vector<QVec>& vs, const QMatrix& O);

// Builds a salient cone; drops duplicate and non-extreme generators.
Cone make_cone(const Space& S, const std::vector<QVec>& gens);

struct Facet {
  std::vector<size_t> gens;  // indices into the cone's generators
  QVec inward_normal;        // inside the span of the cone
  LinearSubspace span;
};

std::vector<Facet> facets(const Space& S, const Cone& c);
Cone dual_cone(const Space& S, const Cone& c);
bool cone_contains(const Space& S, const Cone& c, const QVec& x);
bool cone_interior(const Space& S, const Cone& c, const QVec& x);
// vertex pairs spanning edges (2-dimensional faces of the cone)
std::vector<std::pair<size_t, size_t>> cone_edges(const Space& S, const Cone& c);

// Projective convex polyhedron, stored as the cone over it.
struct ProjPolyhedron {
  Cone cone;
  size_t proj_dim() const { return cone.dim - 1; }
  const std::vector<QVec>& vertices() const { return cone.gens; }
};

ProjPolyhedron make_polyhedron(const Space& S, const std::vector<QVec>& vertices);
std::vector<std::pair<ProjPolyhedron, LinearSubspace>> faces(const Space& S, const ProjPolyhedron& K);
ProjPolyhedron dual_polyhedron(const Space& S, const ProjPolyhedron& K);
// Cross-check of the dual: hull of the points dual to the facet hyperplanes.
ProjPolyhedron dual_polyhedron_via_facets(const Space& S, const ProjPolyhedron& K);
LinearSubspace vertex_hyperplane(const Space& S, const ProjPolyhedron& K, const QVec& v);
ProjPolyhedron cone_over_face(const Space& S, const ProjPolyhedron& K, const QVec& u, const ProjPolyhedron& F);

// The primitive M-point on the ray through r. M is given by basis vectors (rank <= n).
QVec primitive_generator(const QVec& r, const std::vector<QVec>& M);

// Coordinates of x in the lattice basis M (throws RayNotRational if x is outside its Q-span).
QVec lattice_coords(const QVec& x, const std::vector<QVec>& M);

}  // namespace conesum
