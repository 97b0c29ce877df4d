#include "conesum/arith.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace conesum {

Rational bernoulli(unsigned k) {
  static std::vector<Rational> cache{Rational(1)};
  while (cache.size() <= k) {
    unsigned m = static_cast<unsigned>(cache.size());
    // sum_{j <= m} C(m+1, j) B_j = 0
    Rational s = 0;
    Integer c = 1;  // C(m+1, j)
    for (unsigned j = 0; j < m; ++j) {
      s += Rational(c) * cache[j];
      c = c * (m + 1 - j) / (j + 1);
    }
    cache.push_back(-s / (m + 1));
  }
  return cache[k];
}

void validate_module(const LatticeModule& M) {
  const auto& F = *M.F;
  size_t n = F.degree();
  if (M.basis.size() != n || rank(M.basis) != n) throw Error(ErrorCode::InvalidInput, "module basis must have rank n");
  validate_units(F, M.V);
  QMatrix C = transpose(M.basis);  // columns are basis coordinates
  QVec rho = M.rho.empty() ? F.zero() : M.rho;
  auto in_M = [&](const FieldElement& x) {
    QVec c;
    if (!solve(C, x, c)) return false;
    return std::all_of(c.begin(), c.end(), [](const Rational& v) { return v.get_den() == 1; });
  };
  for (const auto& eps : M.V.generators) {
    for (const auto& w : M.basis)
      if (!in_M(F.mul(eps, w)) || !in_M(F.mul(F.inv(eps), w)))
        throw Error(ErrorCode::UnitDoesNotPreserveM, to_string(eps) + " does not preserve M");
    if (!in_M(F.mul(eps, rho) - rho))
      throw Error(ErrorCode::UnitDoesNotPreserveM, to_string(eps) + " does not preserve M + rho");
  }
}

ScaledRational d_M(const LatticeModule& M) {
  Rational d = det(M.basis);
  return ScaledRational(abs(d), 1, M.F->disc_abs());
}

IntersectionData quadratic_intersections(const VertexSequence& vs, PeriodOneConvention conv) {
  IntersectionData data;
  data.s = 1;
  size_t m = vs.m();
  for (long b : vs.b)
    if (b < 2) throw Error(ErrorCode::InvalidInput, "b-cycle entries must be >= 2");
  if (m == 1) {
    data.r = 1;
    if (conv == PeriodOneConvention::SplitNode) {
      data.entries[{2}] = -vs.b[0];
      data.cross_nodes = 1;
      data.convention = "split-node";
    } else {
      data.entries[{2}] = 2 - vs.b[0];
      data.convention = "nodal";
    }
    return data;
  }
  data.r = m;
  data.convention = "cycle";
  for (size_t i = 0; i < m; ++i) {
    std::vector<unsigned> k(m, 0);
    k[i] = 2;
    data.entries[k] = -vs.b[i];
    for (size_t j = i + 1; j < m; ++j) {
      long meet = 0;
      for (size_t t = 0; t < m; ++t) {
        size_t u = (t + 1) % m;
        if ((t == i && u == j) || (t == j && u == i)) ++meet;
      }
      std::vector<unsigned> kk(m, 0);
      kk[i] = kk[j] = 1;
      data.entries[kk] = meet;
    }
  }
  return data;
}

double SatakeValue::value() const { return coeff.to_double() * std::pow(std::numbers::pi, double(pi_power)); }

namespace {

Integer factorial(unsigned k) {
  Integer f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

std::string index_str(const std::vector<unsigned>& k) {
  std::string s = "(";
  for (size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

}  // namespace

SatakeValue satake_rhs(const IntersectionData& data, const ScaledRational& dM, unsigned n) {
  unsigned total = n * data.s;
  if (total % 2) throw Error(ErrorCode::InvalidInput, "ns must be even for a real value");
  if (data.r == 0) throw Error(ErrorCode::InvalidInput, "no components");
  Rational bracket = 0;
  std::vector<unsigned> k(data.r, 0);
  Integer ftotal = factorial(total);
  std::function<void(size_t, unsigned)> rec = [&](size_t pos, unsigned left) {
    if (pos + 1 == data.r) {
      k[pos] = left;
      Rational bs = 1;
      Integer denom = 1;
      for (unsigned ki : k) {
        bs *= bernoulli(ki);
        denom *= factorial(ki);
      }
      if (bs == 0) return;
      auto it = data.entries.find(k);
      if (it == data.entries.end())
        throw Error(ErrorCode::MissingIntersectionEntry, "no entry for exponent " + index_str(k));
      bracket += Rational(ftotal / denom) * bs * it->second;
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      k[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, total);
  if (data.cross_nodes != 0) {
    if (total != 2) throw Error(ErrorCode::InvalidInput, "node cross terms only for ns = 2");
    bracket += 2 * bernoulli(1) * bernoulli(1) * data.cross_nodes;
  }
  // (2 pi i)^{ns} = (-1)^{ns/2} 2^{ns} pi^{ns}
  Rational c = Rational(Integer(1) << total) / Rational(factorial(total));
  Integer sf = factorial(data.s - 1);
  for (unsigned i = 0; i < n; ++i) c /= Rational(sf);
  if ((total / 2) % 2) c = -c;
  SatakeValue out;
  out.bracket = bracket;
  out.pi_power = total;
  out.coeff = (c * bracket) * (ScaledRational(1, 0, dM.D()) / dM);
  return out;
}

namespace {

using i128 = __int128;

Integer lcm_den(const std::vector<Rational>& xs) {
  Integer l = 1;
  for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

long to_long(const Rational& q) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw Error(ErrorCode::InvalidInput, "coefficient too large");
  return q.get_num().get_si();
}

// Linear form c1 U + c2 V (integers) giving a value up to a positive factor.
struct Lin {
  long c1 = 0, c2 = 0;
  i128 at(long U, long V) const { return i128(c1) * U + i128(c2) * V; }
};

Lin make_lin(const Rational& a1, const Rational& a2) {
  Integer l = lcm_den({a1, a2});
  return {to_long(a1 * l), to_long(a2 * l)};
}

}  // namespace

LValue lvalue_numeric(const LatticeModule& M, unsigned s, double cutoff, bool accel, double tol) {
  const auto& F = *M.F;
  if (F.degree() != 2) throw Error(ErrorCode::InvalidInput, "numeric L-values implemented for quadratic fields");
  if (s < 1) throw Error(ErrorCode::InvalidInput, "s >= 1");
  if (!(cutoff >= 4)) throw Error(ErrorCode::CutoffTooSmall, "cutoff must be at least 4");
  validate_module(M);
  if (M.V.rank() != 1) throw Error(ErrorCode::InvalidInput, "V needs one generator");

  // theta^2 + p theta + q = 0; x + y theta has Tr = 2x - p y and mu^(2) - mu^(1) = y (theta2 - theta1)
  Rational p = F.min_poly()[1];
  FieldElement eps = M.V.generators[0];
  auto emb = [&](const FieldElement& x) {
    auto r = F.embed(x, 80);
    return std::pair<double, double>{Rational((r[0].lo + r[0].hi) / 2).get_d(), Rational((r[1].lo + r[1].hi) / 2).get_d()};
  };
  auto [e1, e2] = emb(eps);
  if (e2 < e1) {
    eps = F.inv(eps);
    std::tie(e1, e2) = emb(eps);
  }
  double lambda = e2 / e1;  // > 1
  FieldElement einv = F.inv(eps);

  // mu = (U w1 + V w2) / L with U = L m1 + P1, V = L m2 + P2
  QVec rho = M.rho.empty() ? F.zero() : M.rho;
  QVec rc;
  solve(transpose(M.basis), rho, rc);
  Integer Lz = lcm_den(rc);
  long L = to_long(Lz);
  long P1 = to_long(rc[0] * Lz), P2 = to_long(rc[1] * Lz);
  const auto& w1 = M.basis[0];
  const auto& w2 = M.basis[1];
  auto coord = [&](const FieldElement& a, const FieldElement& b, size_t i) { return make_lin(a[i], b[i]); };
  // y and trace of mu, and of eps^{-1} mu
  FieldElement v1 = F.mul(einv, w1), v2 = F.mul(einv, w2);
  Lin y_mu = coord(w1, w2, 1);
  Lin tr_mu = make_lin(2 * w1[0] - p * w1[1], 2 * w2[0] - p * w2[1]);
  Lin y_nu = coord(v1, v2, 1);
  Lin tr_nu = make_lin(2 * v1[0] - p * v1[1], 2 * v2[0] - p * v2[1]);
  // norm: N(u w1 + v w2) = a u^2 + b uv + c v^2
  Rational na = F.norm(w1), nc = F.norm(w2);
  Rational nb = F.norm(w1 + w2) - na - nc;
  Integer nden = lcm_den({na, nb, nc});
  long A = to_long(na * nden), B = to_long(nb * nden), C = to_long(nc * nden);
  double Nscale = nden.get_d() * double(L) * double(L);  // N = (A U^2 + B UV + C V^2) / Nscale

  auto [w11, w12] = emb(w1);
  auto [w21, w22] = emb(w2);
  double det = w11 * w22 - w21 * w12;
  double R = lambda * std::sqrt(cutoff) * 1.0000001 + 1;
  // (m1, m2) from (mu1, mu2): inverse of [[w11, w21], [w12, w22]]
  double K2 = (std::fabs(w12) + std::fabs(w11)) / std::fabs(det) * R * L + 2;
  long m2max = static_cast<long>(K2 / L) + 2;
  double sq = std::sqrt(cutoff) * 1.0000001 + 1;

  std::vector<double> norms;
  for (long m2 = -m2max; m2 <= m2max; ++m2) {
    long V = L * m2 + P2;
    // |mu1| <= sqrt X and |mu2| <= lambda sqrt X, each linear in U
    double lo = -1e300, hi = 1e300;
    auto clip = [&](double a, double b, double bound) {  // |a U + b V| <= bound, U real
      double c = b * V;
      double u1 = (-bound - c) / a, u2 = (bound - c) / a;
      lo = std::max(lo, std::min(u1, u2));
      hi = std::min(hi, std::max(u1, u2));
    };
    clip(w11 / L, w21 / L, sq);
    clip(w12 / L, w22 / L, R);
    if (lo > hi) continue;
    long m1lo = static_cast<long>(std::floor((lo - P1) / L)) - 1;
    long m1hi = static_cast<long>(std::ceil((hi - P1) / L)) + 1;
    for (long m1 = m1lo; m1 <= m1hi; ++m1) {
      long U = L * m1 + P1;
      i128 Nn = i128(A) * U * U + i128(B) * U * V + i128(C) * V * V;
      if (Nn == 0) continue;
      i128 ym = y_mu.at(U, V), tm = tr_mu.at(U, V);
      if ((ym > 0 ? 1 : ym < 0 ? -1 : 0) * (tm > 0 ? 1 : tm < 0 ? -1 : 0) < 0) continue;  // |mu2| >= |mu1|
      i128 yn = y_nu.at(U, V), tn = tr_nu.at(U, V);
      if (!((yn > 0 && tn < 0) || (yn < 0 && tn > 0))) continue;  // |nu2| < |nu1|
      double N = double(Nn) / Nscale;
      if (std::fabs(N) > cutoff * (1 + 1e-12)) continue;
      norms.push_back(N);
    }
  }
  std::sort(norms.begin(), norms.end(), [](double a, double b) { return std::fabs(a) < std::fabs(b); });

  auto partial = [&](double X) {
    long double acc = 0;
    for (double N : norms) {
      if (std::fabs(N) > X) break;
      long double t = 1.0L / std::pow(std::fabs((long double)N), (long double)s);
      acc += (N < 0 && s % 2) ? -t : t;
    }
    return double(acc);
  };
  double dens = 2 * std::log(lambda) / d_M(M).to_double();
  auto accelerated = [&](double X) {
    if (!accel) return partial(X);
    if (s == 1) return 0.5 * (partial(X) + partial(X / 2));
    if (s % 2 == 0) return partial(X) + dens * std::pow(X, 1.0 - s) / (s - 1);
    return partial(X);
  };
  LValue out;
  out.raw = partial(cutoff);
  out.value = accelerated(cutoff);
  out.estimate = std::fabs(out.value - accelerated(cutoff / 2));
  out.terms = norms.size();
  if (tol > 0 && out.estimate > tol)
    throw Error(ErrorCode::CutoffTooSmall, "error estimate " + std::to_string(out.estimate) + " above tolerance");
  return out;
}

LatticeModule example_module() {
  LatticeModule M;
  M.F = TotallyRealField::make({-3, 0, 1});
  M.basis = {{1, 0}, {0, Rational(1, 3)}};
  M.V.generators = {{2, 1}};
  return M;
}

std::vector<IntersectionData> example_intersections() {
  IntersectionData s1, s2, s3;
  s1.s = 1;
  s1.r = 2;
  s1.entries = {{{2, 0}, -2}, {{0, 2}, -3}, {{1, 1}, 2}};
  s2.s = 2;
  s2.r = 2;
  s2.entries = {{{4, 0}, 0}, {{0, 4}, 0}, {{2, 2}, 3}};
  s3.s = 3;
  s3.r = 2;
  s3.entries = {{{6, 0}, -12}, {{0, 6}, Rational(-81, 2)}, {{4, 2}, -18}, {{2, 4}, -27}};
  return {s1, s2, s3};
}

std::vector<SatakeCheck> verify_satake_example() {
  auto M = example_module();
  ScaledRational dM = d_M(M);
  auto data = example_intersections();
  Integer D = M.F->disc_abs();  // 12, sqrt3 = sqrt12 / 2
  Rational B1 = bernoulli(1), B2 = bernoulli(2), B4 = bernoulli(4), B6 = bernoulli(6);
  std::vector<Rational> termwise{-3 * B2 + 4 * B1 * B1 - 2 * B2, 0 * B4 + 6 * 3 * B2 * B2 + 0 * B4,
                                -12 * B6 - 15 * 18 * B4 * B2 - 15 * 27 * B2 * B4 - Rational(81, 2) * B6};
  // -sqrt3/6, sqrt3/6, -sqrt3/36 as multiples of sqrt12
  std::vector<ScaledRational> expected{ScaledRational(Rational(-1, 12), 1, D), ScaledRational(Rational(1, 12), 1, D),
                                       ScaledRational(Rational(-1, 72), 1, D)};
  std::vector<SatakeCheck> out;
  for (size_t i = 0; i < 3; ++i) {
    SatakeCheck c;
    c.s = data[i].s;
    c.value = satake_rhs(data[i], dM);
    c.bracket = c.value.bracket;
    c.termwise_bracket = termwise[i];
    c.expected = expected[i];
    c.exact_match = c.bracket == c.termwise_bracket && c.value.coeff == c.expected && c.value.pi_power == 2 * c.s;
    out.push_back(c);
  }
  return out;
}

}  // namespace conesum
