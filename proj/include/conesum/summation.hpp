#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conesum/fan.hpp"

namespace conesum {

// h(A)(x0) = det A / prod <x0, A_i>, exponent +1; zero for dependent A.
ScaledRational h(const Space& S, const std::vector<QVec>& A, const QVec& x0);
// h*(A)(x0) = h(B)(x0) for the dual basis B, exponent -1; zero for dependent A.
ScaledRational h_star(const Space& S, const std::vector<QVec>& A, const QVec& x0);
// B with <A_i, B_j> = delta_ij (throws InvalidInput for dependent A).
std::vector<QVec> dual_basis(const Space& S, const std::vector<QVec>& A);

struct HStarTerm {
  ConeKey cone;
  std::vector<QVec> A;  // primitive generators, positively ordered
  std::vector<QVec> B;  // dual basis
  Rational detA;        // coordinate determinant, > 0
  ScaledRational value;
};

// Orders the primitive generators positively; the value is only computed when x0 is regular.
HStarTerm h_star_cone(const Space& S, const std::vector<QVec>& gens, const std::vector<QVec>& M, const QVec& x0);

// Sum of h*(t)(x) over the tops, evaluated at x0 as a rational function (poles must cancel).
ScaledRational group_value(const Space& S, const std::vector<ConeKey>& tops, const std::vector<QVec>& M, const QVec& x0);

struct ConvergenceRow {
  long N = 0;
  bool defined = true;
  ScaledRational partial_sum;
  Rational target;
  double abs_error = 0;
  std::string note;
};

// S(T)(x0) over a truncation with singular terms grouped by stars. Undefined when a star is cut.
ConvergenceRow partial_sum(const TruncatedFan& tf, const QVec& x0);

enum class WindowKind { ConeIndex, UnitPowers };
std::vector<ConvergenceRow> converge(const FanDescription& fan, const QVec& x0, long N_max, double tol,
                                     std::optional<WindowKind> kind = std::nullopt);

// Evaluates h~ on the dual of the boundary cycle of the union of the tops.
ScaledRational sum_via_dual_cycle(const Space& S, const std::vector<QVec>& M, const std::vector<ConeKey>& tops,
                                  const QVec& x0);

struct HurwitzResult {
  double exact_chart;  // simplex volume in the chart, times the constant density of Omega
  double estimate;     // quasi Monte Carlo hit-or-miss in the chart
  double std_error;
};
HurwitzResult hurwitz_area(const Space& S, const std::vector<QVec>& A, const QVec& x0, long samples);

}  // namespace conesum
