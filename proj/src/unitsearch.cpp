#include "conesum/unitsearch.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "conesum/lp.hpp"

namespace conesum {

bool Report::pass() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const Check& c) { return c.pass; });
}

namespace {

// +1: x > y certainly, -1: x < y certainly, 0: undecided
int cmp(const Interval& x, const Interval& y) {
  if (x.certainly_greater(y)) return 1;
  if (x.certainly_less(y)) return -1;
  return 0;
}

// Tri-state conjunction: 1 all true, 0 some false, -1 otherwise.
struct Tri {
  int v = 1;
  void require(int s) {
    if (v == 0) return;
    if (s == 0) v = 0;
    else if (s < 0) v = -1;
  }
};

int as_tri(int c, int want) { return c == want ? 1 : (c == 0 ? -1 : 0); }

size_t mod(long i, size_t n) { return static_cast<size_t>(((i % long(n)) + long(n)) % long(n)); }

void require_degree(const TotallyRealField& F) {
  if (F.degree() < 3) throw Error(ErrorCode::DegreeTooSmall, "admissible units need n >= 3");
}

Interval idet(std::vector<std::vector<Interval>> m, mpfr_prec_t prec) {
  size_t n = m.size();
  if (n == 0) return Interval(Rational(1), prec);
  if (n == 1) return m[0][0];
  Interval acc(Rational(0), prec);
  for (size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Interval>> sub;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Interval> row;
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(row);
    }
    Interval t = m[0][c] * idet(sub, prec);
    acc = (c % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

std::vector<Interval> log_embed(const TotallyRealField& F, const FieldElement& x, mpfr_prec_t prec) {
  std::vector<Interval> out;
  for (auto& e : F.embed_mpfr(x, prec, prec + 16)) out.push_back(e.log());
  return out;
}

}  // namespace

Report check_lemma3(const TotallyRealField& F, const AdmissibleCandidate& cand) {
  require_degree(F);
  size_t n = F.degree();
  Report rep;
  const auto& T = cand.units;
  if (T.size() != n) throw Error(ErrorCode::InvalidInput, "need n units");
  bool units_ok = true;
  for (const auto& e : T) units_ok = units_ok && F.is_unit(e) && F.is_totally_positive(e);
  rep.conditions.push_back({"totally_positive_units", units_ok, ""});
  rep.conditions.push_back({"b_gt_a_gt_1", cand.b > cand.a && cand.a > 1, ""});
  if (!units_ok) return rep;

  static const char* names[] = {"(1) eps_i^(i) < 1 < eps_i^(j)", "(2) strict chain eps_i^(i+1) > ... > eps_i^(i-1)",
                                "(3) ratios in (1/a, a)", "(4) ratios over eps_i^(i) > b"};
  std::vector<int> state(4, -1);
  for (unsigned prec : kPrecisions) {
    Tri c[4];
    Interval one(Rational(1), prec), a(cand.a, prec), b(cand.b, prec);
    for (size_t i = 0; i < n; ++i) {
      auto e = F.embed_mpfr(T[i], prec, prec + 16);
      c[0].require(as_tri(cmp(e[i], one), -1));
      for (size_t j = 0; j < n; ++j)
        if (j != i) {
          c[0].require(as_tri(cmp(e[j], one), 1));
          c[3].require(as_tri(cmp(e[j], b * e[i]), 1));
          for (size_t k = 0; k < n; ++k)
            if (k != i && k != j) c[2].require(as_tri(cmp(e[j], a * e[k]), -1));
        }
      for (size_t s = 1; s + 1 < n; ++s) c[1].require(as_tri(cmp(e[mod(i + s, n)], e[mod(i + s + 1, n)]), 1));
    }
    bool undecided = false;
    for (int k = 0; k < 4; ++k) {
      state[k] = c[k].v;
      undecided = undecided || c[k].v < 0;
    }
    if (!undecided) break;
  }
  for (int k = 0; k < 4; ++k)
    rep.conditions.push_back({names[k], state[k] == 1, state[k] < 0 ? "undecided at maximum precision" : ""});
  return rep;
}

Report check_admissible(const TotallyRealField& F, const std::vector<FieldElement>& T) {
  require_degree(F);
  size_t n = F.degree();
  if (T.size() != n) throw Error(ErrorCode::InvalidInput, "need n units");
  Report rep;
  bool units_ok = true;
  for (const auto& e : T) units_ok = units_ok && F.is_unit(e) && F.is_totally_positive(e);
  rep.conditions.push_back({"totally_positive_units", units_ok, ""});
  if (!units_ok) return rep;

  // regulator of every (n-1)-subset, dropping the last embedding
  int indep = -1;
  std::string detail;
  for (unsigned prec : kPrecisions) {
    Tri t;
    std::vector<std::vector<Interval>> logs;
    for (const auto& e : T) logs.push_back(log_embed(F, e, prec));
    for (size_t skip = 0; skip < n; ++skip) {
      std::vector<std::vector<Interval>> m;
      for (size_t i = 0; i < n; ++i)
        if (i != skip) m.push_back(std::vector<Interval>(logs[i].begin(), logs[i].end() - 1));
      Interval d = idet(m, prec);
      t.require(d.contains_zero() ? (d.width_d() == 0 ? 0 : -1) : 1);
    }
    indep = t.v;
    if (indep >= 0) break;
  }
  rep.conditions.push_back({"independent_subsets", indep == 1, indep < 0 ? "regulator not certified nonzero" : ""});

  bool distinct = true;
  for (const auto& e : T) {
    auto r = F.conjugate_ranks(e);
    std::sort(r.begin(), r.end());
    distinct = distinct && std::adjacent_find(r.begin(), r.end()) == r.end();
  }
  rep.conditions.push_back({"(1) distinct coordinates", distinct, ""});

  bool lp_ok = true;
  for (size_t i = 0; i < n; ++i) {
    auto [mins, maxs] = limit_pair(F, T[i]);
    lp_ok = lp_ok && mins == std::vector<size_t>{i} && maxs == std::vector<size_t>{mod(i + 1, n)};
  }
  rep.conditions.push_back({"(2) L(eps_i) = (e_i, e_{i+1})", lp_ok, ""});

  bool ratio_ok = true;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j) {
        auto [mins, maxs] = limit_pair(F, F.mul(T[i], F.inv(T[j])));
        ratio_ok = ratio_ok && mins == std::vector<size_t>{i} && maxs == std::vector<size_t>{j};
      }
  rep.conditions.push_back({"(3) L(eps_i/eps_j) = (e_i, e_j)", ratio_ok, ""});
  return rep;
}

std::vector<Interval> unit_log(const TotallyRealField& F, const UnitGroupData& V, const std::vector<long>& c,
                               mpfr_prec_t prec) {
  size_t n = F.degree();
  std::vector<Interval> out(n, Interval(Rational(0), prec));
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    auto lg = log_embed(F, V.generators[k], prec);
    Interval ck(Rational(c[k]), prec);
    for (size_t p = 0; p < n; ++p) out[p] = out[p] + ck * lg[p];
  }
  return out;
}

int in_region(const std::vector<Interval>& xi, size_t i, const Rational& a, const Rational& b) {
  size_t n = xi.size();
  mpfr_prec_t prec = xi[0].prec();
  Interval zero(Rational(0), prec);
  Interval la = Interval(a, prec).log(), lb = Interval(b, prec).log();
  Tri t;
  t.require(as_tri(cmp(xi[i], zero), -1));
  for (size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    t.require(as_tri(cmp(xi[j], zero), 1));
    t.require(as_tri(cmp(xi[j] - xi[i], lb), 1));
    for (size_t k = 0; k < n; ++k)
      if (k != i && k != j) t.require(as_tri(cmp(xi[j] - xi[k], la), -1));
  }
  for (size_t s = 1; s + 1 < n; ++s) t.require(as_tri(cmp(xi[mod(i + s, n)], xi[mod(i + s + 1, n)]), 1));
  return t.v == 1 ? 1 : (t.v == 0 ? 0 : -1);
}

AdmissibleCandidate search_admissible(const TotallyRealField& F, const UnitGroupData& V, const Rational& a,
                                      const Rational& b, long radius) {
  require_degree(F);
  size_t n = F.degree();
  if (!(b > a && a > 1)) throw Error(ErrorCode::InvalidInput, "need b > a > 1");
  if (V.rank() != n - 1) throw Error(ErrorCode::InvalidInput, "V needs n-1 generators");
  if (radius < 0) throw Error(ErrorCode::InvalidInput, "negative radius");
  size_t r = n - 1;
  std::vector<std::optional<std::vector<long>>> found(n);
  std::vector<long> c(r, -radius);
  while (true) {
    for (unsigned prec : kPrecisions) {
      auto xi = unit_log(F, V, c, prec);
      bool undecided = false;
      for (size_t i = 0; i < n; ++i) {
        if (found[i]) continue;
        int s = in_region(xi, i, a, b);
        if (s == 1) found[i] = c;
        if (s < 0) undecided = true;
      }
      if (!undecided) break;
    }
    size_t k = r;
    while (k > 0 && c[k - 1] == radius) c[--k] = -radius;
    if (k == 0) break;
    ++c[k - 1];
  }
  AdmissibleCandidate cand;
  cand.a = a;
  cand.b = b;
  for (size_t i = 0; i < n; ++i) {
    if (!found[i])
      throw Error(ErrorCode::NotFound, "no unit in region R_" + std::to_string(i + 1) + " within radius " +
                                           std::to_string(radius));
    FieldElement u = F.one();
    for (size_t k = 0; k < r; ++k) u = F.mul(u, F.pow(V.generators[k], (*found[i])[k]));
    cand.units.push_back(u);
    cand.exponents.push_back(*found[i]);
  }
  return cand;
}

HullChart hull_chart(const TotallyRealField& F, const std::vector<FieldElement>& T, size_t j, long window,
                     mpfr_prec_t prec) {
  require_degree(F);
  size_t n = F.degree();
  if (j >= n || T.size() != n) throw Error(ErrorCode::InvalidInput, "bad chart index");
  if (window < 0) throw Error(ErrorCode::InvalidInput, "negative window");
  HullChart ch;
  ch.j = j;
  ch.window = window;
  ch.prec = prec;
  for (size_t i = 0; i < n; ++i)
    if (i != j) ch.I.push_back(i);
  size_t m = n - 1;

  std::vector<std::vector<Interval>> logs;
  for (const auto& e : T) logs.push_back(log_embed(F, e, prec));
  // E[p][q] = log eps_q^(p) - log eps_q^(j), p over places != j, q over I
  std::vector<std::vector<Interval>> E(m);
  for (size_t p = 0; p < m; ++p)
    for (size_t q = 0; q < m; ++q) E[p].push_back(logs[ch.I[q]][ch.I[p]] - logs[ch.I[q]][j]);
  // a E = (1..1): Cramer on E^T
  Interval d = idet(E, prec);
  if (d.contains_zero()) throw Error(ErrorCode::SingularE, "E not certified invertible at this precision");
  for (size_t col = 0; col < m; ++col) {
    // replace row col of E (column col of E^T) by ones
    auto Ec = E;
    for (size_t q = 0; q < m; ++q) Ec[col][q] = Interval(Rational(1), prec);
    ch.a.push_back(idet(Ec, prec) / d);
  }
  // the equation prod z^a = 1 does not see a common sign; report it positive
  bool all_neg = std::all_of(ch.a.begin(), ch.a.end(), [](const Interval& v) { return v.certainly_neg(); });
  if (all_neg) {
    for (auto& v : ch.a) v = -v;
    ch.sign_flipped = true;
  }

  std::vector<long> alpha(m, -window);
  while (true) {
    long s = 0;
    for (long v : alpha) s += v;
    if (s == 0) {
      std::vector<Interval> lv(n, Interval(Rational(0), prec));
      for (size_t q = 0; q < m; ++q) {
        Interval aq(Rational(alpha[q]), prec);
        for (size_t p = 0; p < n; ++p) lv[p] = lv[p] + aq * logs[ch.I[q]][p];
      }
      std::vector<Interval> z;
      for (size_t p : ch.I) z.push_back((lv[p] - lv[j]).exp());
      ch.alpha.push_back(alpha);
      ch.z.push_back(z);
    }
    size_t k = m;
    while (k > 0 && alpha[k - 1] == window) alpha[--k] = -window;
    if (k == 0) break;
    ++alpha[k - 1];
  }
  return ch;
}

double chart_residual(const HullChart& ch) {
  double worst = 0;
  for (const auto& z : ch.z) {
    Interval s(Rational(0), ch.prec);
    for (size_t i = 0; i < z.size(); ++i) s = s + ch.a[i] * z[i].log();
    worst = std::max({worst, std::fabs(s.lo_d()), std::fabs(s.hi_d())});
  }
  return worst;
}

namespace {

Rational mid_q(const Interval& x) { return Rational(x.mid_d()); }

// 1 vertex, 0 not a vertex (exact LP on midpoints), -1 undecided
int vertex_state(const HullChart& ch, size_t idx) {
  const auto& p = ch.z[idx];
  size_t m = p.size();
  // tangent functional of sum a_i log z_i at p, rounded to rationals
  std::vector<Interval> c;
  for (size_t i = 0; i < m; ++i) c.push_back(Interval(mid_q(ch.a[i] / p[i]), ch.prec));
  bool all = true, neg = false;
  for (size_t q = 0; q < ch.z.size(); ++q) {
    if (q == idx) continue;
    Interval s(Rational(0), ch.prec);
    for (size_t i = 0; i < m; ++i) s = s + c[i] * (ch.z[q][i] - p[i]);
    if (!s.certainly_pos()) all = false;
    if (s.certainly_neg()) neg = true;
  }
  if (all) return 1;
  if (!neg) return -1;
  // p in the hull of the others? lambda >= 0, sum lambda = 1, sum lambda q = p
  size_t k = ch.z.size() - 1;
  QMatrix ge, eq;
  QVec ge_rhs, eq_rhs;
  for (size_t v = 0; v < k; ++v) {
    QVec row(k, Rational(0));
    row[v] = 1;
    ge.push_back(row);
    ge_rhs.push_back(0);
  }
  eq.push_back(QVec(k, Rational(1)));
  eq_rhs.push_back(1);
  for (size_t i = 0; i < m; ++i) {
    QVec row;
    for (size_t q = 0; q < ch.z.size(); ++q)
      if (q != idx) row.push_back(mid_q(ch.z[q][i]));
    eq.push_back(row);
    eq_rhs.push_back(mid_q(p[i]));
  }
  return lp::feasible(ge, ge_rhs, eq, eq_rhs, k) ? 0 : -1;
}

}  // namespace

bool verify_vertices(const TotallyRealField& F, const std::vector<FieldElement>& T, size_t j, long window) {
  for (unsigned prec : kPrecisions) {
    HullChart ch = hull_chart(F, T, j, window, prec);
    bool undecided = false;
    for (size_t i = 0; i < ch.z.size(); ++i) {
      int s = vertex_state(ch, i);
      if (s == 0) return false;
      if (s < 0) undecided = true;
    }
    if (!undecided) return true;
  }
  throw Error(ErrorCode::PrecisionExhausted, "vertex property not certified at maximum precision");
}

namespace {

FieldElement vi_point(const TotallyRealField& F, const std::vector<FieldElement>& T, const HullChart& ch,
                      size_t idx) {
  FieldElement v = F.one();
  for (size_t q = 0; q < ch.I.size(); ++q) v = F.mul(v, F.pow(T[ch.I[q]], ch.alpha[idx][q]));
  return v;
}

// 1 inside, 0 outside, -1 undecided at this precision
int chart_state(const TotallyRealField& F, const std::vector<FieldElement>& T, const HullChart& ch,
                const std::vector<Interval>& y, const FieldElement& xs) {
  std::vector<size_t> idx(ch.z.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  // charted points run along a monotone curve; orient them by increasing z_1
  int dir = cmp(ch.z[idx.back()][0], ch.z[idx.front()][0]);
  if (dir == 0) return -1;
  if (dir < 0) std::reverse(idx.begin(), idx.end());
  const auto& first = ch.z[idx.front()];
  const auto& last = ch.z[idx.back()];

  // dominating a hull point puts y in its recession cone
  for (size_t i : idx)
    if (y[0].certainly_greater(ch.z[i][0]) && y[1].certainly_greater(ch.z[i][1])) return 1;
  int left = cmp(y[0], first[0]), right = cmp(y[0], last[0]);
  if (left < 0 || right > 0) throw Error(ErrorCode::WindowTooSmall, "point outside the charted window");
  if (left == 0 || right == 0) {
    for (size_t i : {idx.front(), idx.back()})
      if (is_zero(xs) == false && rank({xs, vi_point(F, T, ch, i)}) == 1) return 1;
    return -1;
  }
  bool undecided = false;
  for (size_t e = 0; e + 1 < idx.size(); ++e) {
    const auto& P = ch.z[idx[e]];
    const auto& Q = ch.z[idx[e + 1]];
    Interval side = (Q[0] - P[0]) * (y[1] - P[1]) - (Q[1] - P[1]) * (y[0] - P[0]);
    if (side.certainly_neg()) return 0;
    if (side.certainly_pos()) continue;
    // exactly on the edge line when the three field elements are dependent
    if (det(QMatrix{xs, vi_point(F, T, ch, idx[e]), vi_point(F, T, ch, idx[e + 1])}) != 0) undecided = true;
  }
  return undecided ? -1 : 1;
}

}  // namespace

bool sigma_N_contains(const TotallyRealField& F, const std::vector<FieldElement>& T, long N, const FieldElement& x,
                      long window) {
  require_degree(F);
  if (F.degree() != 3)
    throw Error(ErrorCode::WindowTooSmall, "windowed hull descriptions are only available for cubic fields");
  if (window < 1) throw Error(ErrorCode::WindowTooSmall, "window must be at least 1");
  if (is_zero(x) || !F.is_totally_positive(x)) return false;
  for (unsigned prec : kPrecisions) {
    bool undecided = false;
    auto lx = log_embed(F, x, prec);
    for (size_t j = 0; j < 3; ++j) {
      HullChart ch = hull_chart(F, T, j, window, prec);
      auto le = log_embed(F, T[j], prec);
      Interval Nq(Rational(N), prec);
      std::vector<Interval> y;
      for (size_t p : ch.I) y.push_back((lx[p] + Nq * le[p] - lx[j] - Nq * le[j]).exp());
      int s;
      try {
        s = chart_state(F, T, ch, y, F.mul(x, F.pow(T[j], N)));
      } catch (const Error& e) {
        throw Error(ErrorCode::WindowTooSmall, "place " + std::to_string(j + 1) + ": " + e.what());
      }
      if (s == 0) return false;
      if (s < 0) undecided = true;
    }
    if (!undecided) return true;
  }
  throw Error(ErrorCode::PrecisionExhausted, "Sigma_N membership not certified at maximum precision");
}


double minor_closed_form(const std::vector<double>& p, const std::vector<double>& z, size_t k) {
  double f = 1, sum = 1, prod = 1;
  for (size_t i = 0; i < p.size(); ++i) f *= std::pow(z[i], -p[i]);
  for (size_t i = 0; i < k; ++i) {
    sum += p[i];
    prod *= p[i] / (z[i] * z[i]);
  }
  return std::pow(f, double(k)) * prod * sum;
}

double minor_alt(const std::vector<double>& p, const std::vector<double>& z, size_t k) {
  double n2 = double(p.size());  // n - 2 variables
  double sum = 1, prod = 1;
  for (size_t i = 0; i < k; ++i) {
    sum += p[i];
    prod *= p[i] * std::pow(z[i], -n2 * p[i] - 2);
  }
  return sum * prod;
}

namespace {

double ddet(std::vector<std::vector<double>> a) {
  size_t n = a.size();
  double d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    if (a[piv][c] == 0) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      double f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

}  // namespace

ConvexityReport convexity_check(const std::vector<double>& p, const std::vector<std::vector<double>>& grid,
                                double step, double tol) {
  size_t m = p.size();
  if (m == 0) throw Error(ErrorCode::InvalidInput, "need at least one exponent");
  for (double v : p)
    if (!(v > 0)) throw Error(ErrorCode::InvalidInput, "exponents must be positive");
  auto f = [&](const std::vector<double>& z) {
    double r = 1;
    for (size_t i = 0; i < m; ++i) r *= std::pow(z[i], -p[i]);
    return r;
  };
  ConvexityReport rep;
  for (const auto& z0 : grid) {
    if (z0.size() != m) throw Error(ErrorCode::InvalidInput, "grid point of wrong dimension");
    std::vector<std::vector<double>> H(m, std::vector<double>(m));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        double hi = step * z0[i], hj = step * z0[j];
        auto at = [&](double si, double sj) {
          auto z = z0;
          z[i] += si * hi;
          z[j] += sj * hj;
          return f(z);
        };
        H[i][j] = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4 * hi * hj);
      }
    for (size_t k = 1; k <= m; ++k) {
      std::vector<std::vector<double>> Mk(k, std::vector<double>(k));
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) Mk[i][j] = H[i][j];
      double fd = ddet(Mk);
      double c = minor_closed_form(p, z0, k), pr = minor_alt(p, z0, k);
      rep.all_minors_positive = rep.all_minors_positive && c > 0 && pr > 0 && fd > 0;
      rep.max_rel_err = std::max(rep.max_rel_err, std::fabs(fd - c) / std::fabs(c));
      rep.max_rel_err_alt = std::max(rep.max_rel_err_alt, std::fabs(fd - pr) / std::fabs(pr));
    }
  }
  rep.matches = rep.max_rel_err <= tol;
  rep.alt_matches = rep.max_rel_err_alt <= tol;
  return rep;
}

}  // namespace conesum
