#pragma once

#include <map>
#include <string>
#include <vector>

#include "conesum/fan.hpp"

namespace conesum {

Rational bernoulli(unsigned k);  // B_1 = -1/2

struct LatticeModule {
  FieldPtr F;
  std::vector<FieldElement> basis;
  FieldElement rho;  // empty means 0
  UnitGroupData V;
};

// Checks independence of the basis and that every generator of V maps M + rho to itself.
void validate_module(const LatticeModule& M);
// Square root of the discriminant of M: |det of basis coordinates| * sqrt(|disc F|).
ScaledRational d_M(const LatticeModule& M);

enum class PeriodOneConvention { SplitNode, Nodal };

struct IntersectionData {
  unsigned s = 1;
  size_t r = 0;                                       // number of components
  std::map<std::vector<unsigned>, Rational> entries;  // exponent multi-index -> kappa * D^k
  long cross_nodes = 0;  // split-node bookkeeping for a single component: nodes counted as 2 B_1^2 each
  std::string convention;
};

// Self-intersections -b_k and adjacency counts from the b-cycle (s = 1).
IntersectionData quadratic_intersections(const VertexSequence& vs,
                                         PeriodOneConvention conv = PeriodOneConvention::SplitNode);

struct SatakeValue {
  Rational bracket;       // (sum B D)^{ns} with Bernoulli symbols substituted
  ScaledRational coeff;   // L = coeff * pi^{ns}
  unsigned pi_power = 0;
  double value() const;
};

// Solves the Satake relation for L(M, V; s), n = 2 by default.
SatakeValue satake_rhs(const IntersectionData& data, const ScaledRational& dM, unsigned n = 2);

struct LValue {
  double value = 0;      // accelerated partial sum at the cutoff
  double estimate = 0;   // |accelerated(X) - accelerated(X/2)|
  double raw = 0;        // plain partial sum at the cutoff
  size_t terms = 0;
};

// Sum of N(mu)^{-s} over (M + rho)/V, mu != 0, ordered by |N(mu)|, quadratic fields.
// accel: s = 1 averages the partial sums at X and X/2; even s adds the tail dens X^{1-s}/(s-1).
LValue lvalue_numeric(const LatticeModule& M, unsigned s, double cutoff, bool accel = true, double tol = 0);

struct SatakeCheck {
  unsigned s;
  Rational bracket;           // recomputed
  Rational termwise_bracket;  // the expansion written out term by term
  SatakeValue value;
  ScaledRational expected;    // coefficient of pi^{2s}
  bool exact_match;
};
// The evaluations at s = 1, 2, 3 for Q(sqrt3), M = Z + Z sqrt3/3.
std::vector<SatakeCheck> verify_satake_example();
LatticeModule example_module();
std::vector<IntersectionData> example_intersections();

}  // namespace conesum
