#pragma once

#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "conesum/geometry.hpp"

namespace conesum {

// Flag L^(1) < ... < L^(d); L^(i) has projective dimension i.
using Flag = std::vector<LinearSubspace>;
using Leaf = std::map<QVec, long>;  // projective points (first nonzero coordinate 1) with weights

// A chain of degree d, fully expanded down to Z_0 leaves.
struct Cycle {
  int degree = 0;
  std::map<Flag, Leaf> terms;

  void add(const Flag& f, const QVec& point, long w);
  bool is_zero() const { return terms.empty(); }
  size_t size() const;
  Cycle& operator+=(const Cycle& o);
  Cycle operator-() const;
  friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
  friend Cycle operator-(Cycle a, const Cycle& b) { return a += -b; }
  friend Cycle operator*(long s, const Cycle& c);
  // integer scalars only (used by cpd_extend)
  friend Cycle operator*(const Rational& s, const Cycle& c);
  bool operator==(const Cycle& o) const { return degree == o.degree && terms == o.terms; }
  bool operator!=(const Cycle& o) const { return !(*this == o); }
  std::vector<QVec> points() const;
};

Cycle zero_cycle(int degree);

// sigma_{k-1}(A_0, ..., A_k); the zero cycle when the points are dependent.
Cycle simplex_cycle(const std::vector<QVec>& A);

// z (a cycle inside L) viewed as an element of C_{d+1} with top space L.
Cycle push(const LinearSubspace& L, const Cycle& z);

// Forgets the top subspace of every flag (degree d >= 1).
Cycle boundary(const Cycle& c);
long total_weight(const Cycle& c);
bool is_cycle(const Cycle& c);

struct SimplexTerm {
  long coeff;
  std::vector<QVec> points;
};

// z = sum coeff * sigma(points), by coning from a base point at every level.
// The base point defaults to the lexicographically smallest point of z.
std::vector<SimplexTerm> simplex_decomposition(const Cycle& z, const std::optional<QVec>& base = std::nullopt);

template <class G, class Fn>
G cpd_extend(const Cycle& z, Fn f, G zero, const std::optional<QVec>& base = std::nullopt) {
  G acc = zero;
  for (const auto& t : simplex_decomposition(z, base)) {
    G v = f(t.points);
    acc += Rational(t.coeff) * v;
  }
  return acc;
}

// D(A_1..A_n) = sigma(B_1..B_n), B_i the trace-orthogonal point of span(A without A_i).
Cycle dual_simplex(const Space& S, const std::vector<QVec>& A);
Cycle dual_cycle(const Space& S, const Cycle& z);

// Polyhedral cycle z(K). O is an ordered basis orienting span(K); defaults to the
// standard orientation when K is full dimensional.
Cycle boundary_cycle(const Space& S, const ProjPolyhedron& K, const std::optional<QMatrix>& O = std::nullopt);

// z(K*) == [z(K)]*, both sides computed independently.
bool theorem2_check(const Space& S, const ProjPolyhedron& K);

nlohmann::json to_json(const Cycle& c);
Cycle cycle_from_json(const nlohmann::json& j);

}  // namespace conesum
