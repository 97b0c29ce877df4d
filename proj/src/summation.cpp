#include "conesum/summation.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "conesum/cycles.hpp"

namespace conesum {

ScaledRational h(const Space& S, const std::vector<QVec>& A, const QVec& x0) {
  Rational d = det(A);
  if (d == 0) return ScaledRational::zero(S.D);
  Rational prod = 1;
  for (const auto& a : A) {
    Rational p = S.pair(x0, a);
    if (p == 0) throw Error(ErrorCode::SingularAt_x0, "<x0, A_i> = 0");
    prod *= p;
  }
  return ScaledRational(d / prod, 1, S.D);
}

std::vector<QVec> dual_basis(const Space& S, const std::vector<QVec>& A) {
  // P = A G (row i is the functional <A_i, .>); columns of P^-1 are the B_j
  QMatrix P = mat_mul(A, S.G);
  if (det(P) == 0) throw Error(ErrorCode::InvalidInput, "dual basis of dependent points");
  std::vector<QVec> B = transpose(inverse(P));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < B.size(); ++j)
      if (S.pair(A[i], B[j]) != (i == j ? 1 : 0)) throw Error(ErrorCode::InvalidInput, "dual basis identity failed");
  return B;
}

ScaledRational h_star(const Space& S, const std::vector<QVec>& A, const QVec& x0) {
  Rational d = det(A);
  if (d == 0) return ScaledRational::zero(S.D);
  auto B = dual_basis(S, A);
  Rational prod = 1;
  for (const auto& b : B) {
    Rational p = S.pair(x0, b);
    if (p == 0) throw Error(ErrorCode::SingularAt_x0, "<x0, B_i> = 0");
    prod *= p;
  }
  // det B = 1 / (det A * D) in coordinates, so h(B) = 1 / (det A * prod * sqrt(D))
  return ScaledRational(1 / (d * prod), -1, S.D);
}

HStarTerm h_star_cone(const Space& S, const std::vector<QVec>& gens, const std::vector<QVec>& M, const QVec& x0) {
  if (gens.size() != S.n) throw Error(ErrorCode::InvalidInput, "h* of a cone needs a top dimensional cone");
  HStarTerm t;
  t.cone = cone_key(gens);
  for (const auto& g : gens) t.A.push_back(primitive_generator(g, M));
  t.detA = det(t.A);
  if (t.detA == 0) throw Error(ErrorCode::InvalidInput, "cone is not simplicial");
  if (t.detA < 0) {
    std::swap(t.A[0], t.A[1]);
    t.detA = -t.detA;
  }
  t.B = dual_basis(S, t.A);
  t.value = h_star(S, t.A, x0);
  return t;
}

namespace {

// truncated power series in delta, degree <= P
using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, size_t P) {
  Series c(P + 1, Rational(0));
  for (size_t i = 0; i <= P; ++i)
    for (size_t j = 0; i + j <= P; ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

ScaledRational group_value(const Space& S, const std::vector<ConeKey>& tops, const std::vector<QVec>& M, const QVec& x0) {
  std::vector<HStarTerm> terms;
  for (const auto& t : tops) {
    HStarTerm term;
    term.cone = t;
    for (const auto& g : t) term.A.push_back(primitive_generator(g, M));
    term.detA = det(term.A);
    if (term.detA < 0) {
      std::swap(term.A[0], term.A[1]);
      term.detA = -term.detA;
    }
    term.B = dual_basis(S, term.A);
    terms.push_back(term);
  }
  size_t P = 0;
  for (const auto& t : terms) {
    size_t z = 0;
    for (const auto& b : t.B)
      if (S.pair(x0, b) == 0) ++z;
    P = std::max(P, z);
  }
  if (P == 0) {
    ScaledRational acc = ScaledRational::zero(S.D);
    for (const auto& t : terms) acc += h_star(S, t.A, x0);
    return acc;
  }
  // direction w off every singular hyperplane met by x0
  QVec w;
  for (long s = 1;; ++s) {
    w = zero_vec(S.n);
    Rational p = 1;
    for (size_t i = 0; i < S.n; ++i, p *= s) w[i] = p;
    bool ok = true;
    for (const auto& t : terms)
      for (const auto& b : t.B)
        if (S.pair(x0, b) == 0 && S.pair(w, b) == 0) ok = false;
    if (ok) break;
  }
  // Laurent coefficients of delta^-P .. delta^0 of sum h*(t)(x0 + delta w)
  std::vector<Rational> laurent(P + 1, Rational(0));
  for (const auto& t : terms) {
    Series s(P + 1, Rational(0));
    s[0] = 1;
    Rational pole_scale = 1;
    size_t z = 0;
    for (const auto& b : t.B) {
      Rational a = S.pair(x0, b), c = S.pair(w, b);
      if (a == 0) {
        pole_scale /= c;
        ++z;
        continue;
      }
      Series f(P + 1);
      Rational r = 1 / a;
      for (size_t k = 0; k <= P; ++k) {
        f[k] = r;
        r *= -c / a;
      }
      s = series_mul(s, f, P);
    }
    // term = pole_scale / detA * delta^-z * s(delta)
    for (size_t k = 0; k <= z; ++k) laurent[P - z + k] += pole_scale / t.detA * s[k];
  }
  for (size_t i = 0; i < P; ++i)
    if (laurent[i] != 0) throw Error(ErrorCode::SingularAt_x0, "grouped terms keep a pole at x0");
  return ScaledRational(laurent[P], -1, S.D);
}

ConvergenceRow partial_sum(const TruncatedFan& tf, const QVec& x0) {
  ConvergenceRow row;
  row.target = 1 / tf.S.norm(x0);
  ScaledRational acc = ScaledRational::zero(tf.S.D);
  for (const auto& g : group_singular_terms(x0, tf)) {
    if (!g.complete) {
      row.defined = false;
      row.note = "x0 lies on a cone whose star is cut by the window";
      return row;
    }
    if (g.singular)
      acc += group_value(tf.S, g.tops, tf.M, x0);
    else
      acc += h_star_cone(tf.S, g.tops[0], tf.M, x0).value;
  }
  row.partial_sum = acc;
  row.abs_error = abs_difference(acc, row.target);
  return row;
}

std::vector<ConvergenceRow> converge(const FanDescription& fan, const QVec& x0, long N_max, double tol,
                                     std::optional<WindowKind> kind) {
  if (!fan.S.totally_positive(x0)) throw Error(ErrorCode::NotTotallyPositive, "x0 must be totally positive");
  WindowKind k = kind ? *kind : (fan.seq ? WindowKind::ConeIndex : WindowKind::UnitPowers);
  std::vector<ConvergenceRow> rows;
  for (long N = k == WindowKind::ConeIndex ? 1 : 0; N <= N_max; ++N) {
    TruncatedFan tf = k == WindowKind::ConeIndex ? quadratic_window(fan, N) : truncate(fan, N);
    ConvergenceRow r = partial_sum(tf, x0);
    r.N = N;
    rows.push_back(r);
    if (tol > 0 && r.defined && r.abs_error < tol) break;
  }
  return rows;
}

ScaledRational sum_via_dual_cycle(const Space& S, const std::vector<QVec>& M, const std::vector<ConeKey>& tops,
                                  const QVec& x0) {
  std::vector<QVec> all;
  for (const auto& t : tops)
    for (const auto& g : t) all.push_back(primitive_generator(g, M));
  ProjPolyhedron K = make_polyhedron(S, all);
  if (K.cone.dim != S.n) throw Error(ErrorCode::NotConvexUnion, "union is not full dimensional");
  // the union is the hull iff every facet of a top cone that is not shared lies in a facet of the hull
  auto hull_facets = facets(S, K.cone);
  std::map<ConeKey, int> count;
  for (const auto& t : tops)
    for (size_t i = 0; i < t.size(); ++i) {
      ConeKey f = t;
      f.erase(f.begin() + i);
      ++count[cone_key(f)];
    }
  for (const auto& [f, c] : count) {
    if (c == 2) continue;
    if (c > 2) throw Error(ErrorCode::NotConvexUnion, "cones overlap");
    bool on_hull = false;
    for (const auto& hf : hull_facets) {
      bool all_in = true;
      for (const auto& g : f)
        if (S.pair(hf.inward_normal, g) != 0) all_in = false;
      if (all_in) on_hull = true;
    }
    if (!on_hull) throw Error(ErrorCode::NotConvexUnion, "union of the cones is not convex");
  }
  Cycle z = boundary_cycle(S, K);
  Cycle zs = dual_cycle(S, z);
  return cpd_extend(zs, [&](const std::vector<QVec>& A) { return h(S, A, x0); }, ScaledRational::zero(S.D));
}

namespace {

double radical_inverse(unsigned long i, unsigned base) {
  double f = 1.0 / base, r = 0;
  while (i) {
    r += f * (i % base);
    i /= base;
    f /= base;
  }
  return r;
}

}  // namespace

HurwitzResult hurwitz_area(const Space& S, const std::vector<QVec>& A, const QVec& x0, long samples) {
  size_t n = S.n;
  if (A.size() != n) throw Error(ErrorCode::InvalidInput, "hurwitz_area needs n points");
  if (det(A) == 0) throw Error(ErrorCode::SingularAt_x0, "det A = 0");
  // chart {<x0, y> = 1}: y = p + sum u_j W_j with W a basis of the orthogonal complement of x0
  QVec p = (1 / S.pair(x0, x0)) * x0;
  QMatrix W = orthogonal_in(S, identity(n), {x0});
  std::vector<QVec> U;
  for (const auto& a : A) {
    Rational s = S.pair(x0, a);
    if (s == 0) throw Error(ErrorCode::SingularAt_x0, "<x0, A_i> = 0");
    QVec y = (1 / s) * a - p;
    U.push_back(lattice_coords(y, W));
  }
  // Omega pulls back to (n-1)! det(p, W) du; the oriented simplex has volume det(U_i - U_0)/(n-1)!
  QMatrix pw{p};
  pw.insert(pw.end(), W.begin(), W.end());
  Rational c = det(pw);
  QMatrix E;
  for (size_t i = 1; i < n; ++i) E.push_back(U[i] - U[0]);
  Rational dU = det(E);
  double sqrtD = std::sqrt(Integer(S.D).get_d());
  HurwitzResult res;
  res.exact_chart = Rational(c * dU).get_d() * sqrtD;  // (n-1)! and 1/(n-1)! cancel

  // hit-or-miss over the bounding box of the simplex in u coordinates (Halton points)
  size_t m = n - 1;
  std::vector<double> lo(m, 1e300), hi(m, -1e300);
  std::vector<std::vector<double>> Ud(n, std::vector<double>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      Ud[i][j] = U[i][j].get_d();
      lo[j] = std::min(lo[j], Ud[i][j]);
      hi[j] = std::max(hi[j], Ud[i][j]);
    }
  QMatrix Einv = inverse(transpose(E));  // barycentric: lambda = Einv (u - U_0)
  std::vector<std::vector<double>> Ed(m, std::vector<double>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) Ed[i][j] = Einv[i][j].get_d();
  static const unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
  long hits = 0;
  std::vector<double> u(m), lam(m);
  for (long s = 1; s <= samples; ++s) {
    for (size_t j = 0; j < m; ++j) u[j] = lo[j] + (hi[j] - lo[j]) * radical_inverse(s, primes[j]) - Ud[0][j];
    bool in = true;
    double sum = 0;
    for (size_t i = 0; i < m && in; ++i) {
      double l = 0;
      for (size_t j = 0; j < m; ++j) l += Ed[i][j] * u[j];
      if (l < 0) in = false;
      sum += l;
    }
    if (in && sum <= 1) ++hits;
  }
  double box = 1;
  for (size_t j = 0; j < m; ++j) box *= hi[j] - lo[j];
  double frac = samples > 0 ? double(hits) / samples : 0;
  double fact = 1;
  for (size_t k = 2; k <= m; ++k) fact *= k;
  double density = c.get_d() * sqrtD * fact * sgn(dU);
  res.estimate = density * box * frac;
  res.std_error = samples > 0 ? std::fabs(density) * box * std::sqrt(frac * (1 - frac) / samples) : 0;
  return res;
}

}  // namespace conesum
