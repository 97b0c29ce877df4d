#pragma once

#include <optional>

#include "conesum/rational.hpp"

namespace conesum::lp {

// Feasibility of { x free : ge * x >= ge_rhs, eq * x = eq_rhs }, exact (phase I simplex, Bland's rule).
std::optional<QVec> feasible(const QMatrix& ge, const QVec& ge_rhs, const QMatrix& eq, const QVec& eq_rhs,
                             size_t nvars);

}  // namespace conesum::lp
