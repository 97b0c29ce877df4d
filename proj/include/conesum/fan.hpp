#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "conesum/geometry.hpp"

namespace conesum {

// Generators of a simplicial cone, kept sorted so equal cones compare equal.
using ConeKey = std::vector<QVec>;
ConeKey cone_key(std::vector<QVec> gens);

// Hull boundary of the totally positive M-points of a real quadratic field.
struct VertexSequence {
  std::vector<QVec> period;  // A_0 .. A_{m-1}
  std::vector<long> b;       // A_{k-1} + A_{k+1} = b_k A_k
  QVec eps, eps_inv;
  size_t m() const { return period.size(); }
  QVec at(const TotallyRealField& F, long k) const;
};

struct FanDescription {
  enum class Kind { QuadraticAuto, Explicit };
  Kind kind = Kind::Explicit;
  Space S;
  std::vector<QVec> M;     // lattice basis
  UnitGroupData V;
  // orbit representatives of top cones; a refined quadratic fan keeps the pieces of t_r together
  std::vector<std::vector<std::vector<QVec>>> reps;
  std::optional<VertexSequence> seq;
};

struct TruncatedFan {
  Space S;
  std::vector<QVec> M;
  std::set<ConeKey> cones;  // face closed, includes the zero cone (empty key)
  std::string window;

  std::vector<ConeKey> top() const;
  bool contains(const ConeKey& c) const { return cones.count(c) > 0; }
};

FanDescription build_quadratic_fan(const Space& S, const std::vector<QVec>& M, const QVec& eps);
FanDescription explicit_fan(const Space& S, const std::vector<QVec>& M, const UnitGroupData& V,
                            const std::vector<std::vector<QVec>>& top_cones);

// Face closure of a set of simplicial top cones.
TruncatedFan fan_from_top_cones(const Space& S, const std::vector<QVec>& M, const std::vector<std::vector<QVec>>& tops,
                                const std::string& window);

// Orbit representatives moved by all unit powers with exponents in [-N, N].
TruncatedFan truncate(const FanDescription& fan, long N);
// Quadratic fans: cones t_k for -N <= k < N (the window used by the convergence driver).
TruncatedFan quadratic_window(const FanDescription& fan, long N);

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};
std::vector<Check> validate_good_fan(const TruncatedFan& tf, const UnitGroupData& V);

std::vector<ConeKey> star(const ConeKey& sigma, const TruncatedFan& tf);
std::vector<ConeKey> link(const ConeKey& sigma, const TruncatedFan& tf);

std::vector<ConeKey> singular_cones(const QVec& x0, const TruncatedFan& tf);

struct TermGroup {
  std::vector<ConeKey> tops;
  std::optional<ConeKey> singular;  // set for star groups
  bool complete = true;             // false when the star is cut by the window
};
std::vector<TermGroup> group_singular_terms(const QVec& x0, const TruncatedFan& tf);

// Splits the top cone containing the ray in its interior, and its V-translates in the window.
TruncatedFan refine_insert_ray(const TruncatedFan& tf, const QVec& ray, const UnitGroupData& V);
// Same on an orbit description (quadratic only): the representative containing the ray is split.
FanDescription refine_insert_ray(const FanDescription& fan, const QVec& ray);

}  // namespace conesum
