#include "conesum/lp.hpp"

namespace conesum::lp {

std::optional<QVec> feasible(const QMatrix& ge, const QVec& ge_rhs, const QMatrix& eq, const QVec& eq_rhs,
                             size_t nvars) {
  // columns: u (nvars), v (nvars), slacks (ge rows), artificials (all rows); x = u - v
  size_t mg = ge.size(), me = eq.size(), m = mg + me;
  size_t ns = 2 * nvars + mg, nc = ns + m;
  QMatrix T(m, zero_vec(nc + 1));
  for (size_t i = 0; i < m; ++i) {
    const QVec& row = i < mg ? ge[i] : eq[i - mg];
    Rational rhs = i < mg ? ge_rhs[i] : eq_rhs[i - mg];
    for (size_t j = 0; j < nvars; ++j) {
      T[i][j] = row[j];
      T[i][nvars + j] = -row[j];
    }
    if (i < mg) T[i][2 * nvars + i] = -1;
    T[i][nc] = rhs;
    if (rhs < 0)
      for (auto& c : T[i]) c = -c;
    T[i][ns + i] = 1;
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = ns + i;
  // reduced costs for min sum(artificials)
  QVec cost = zero_vec(nc + 1);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= nc; ++j) cost[j] -= T[i][j];
  for (size_t i = 0; i < m; ++i) cost[ns + i] = 0;

  while (true) {
    size_t enter = nc;
    for (size_t j = 0; j < nc; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == nc) break;
    size_t leave = m;
    Rational best;
    for (size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational r = T[i][nc] / T[i][enter];
      if (leave == m || r < best || (r == best && basis[i] < basis[leave])) {
        leave = i;
        best = r;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase I
    Rational piv = T[leave][enter];
    for (auto& c : T[leave]) c /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (size_t j = 0; j <= nc; ++j) T[i][j] -= f * T[leave][j];
    }
    Rational f = cost[enter];
    for (size_t j = 0; j <= nc; ++j) cost[j] -= f * T[leave][j];
    basis[leave] = enter;
  }
  if (cost[nc] != 0) return std::nullopt;
  QVec col = zero_vec(nc);
  for (size_t i = 0; i < m; ++i) col[basis[i]] = T[i][nc];
  QVec x(nvars);
  for (size_t j = 0; j < nvars; ++j) x[j] = col[j] - col[nvars + j];
  return x;
}

}  // namespace conesum::lp
