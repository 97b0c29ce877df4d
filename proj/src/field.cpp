#include "conesum/field.hpp"

#include <algorithm>
#include <functional>

namespace conesum {

namespace {

Rational pow2_neg(unsigned bits) {
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, bits);
  return Rational(1, d);
}

// Elementary symmetric functions of the given intervals, e_0..e_k.
std::vector<RatInterval> elementary(const std::vector<RatInterval>& xs) {
  std::vector<RatInterval> e{{1, 1}};
  for (const auto& x : xs) {
    std::vector<RatInterval> ne(e.size() + 1, RatInterval{0, 0});
    for (size_t i = 0; i < e.size(); ++i) {
      ne[i].lo += e[i].lo;
      ne[i].hi += e[i].hi;
      Rational c[4] = {e[i].lo * x.lo, e[i].lo * x.hi, e[i].hi * x.lo, e[i].hi * x.hi};
      ne[i + 1].lo += *std::min_element(c, c + 4);
      ne[i + 1].hi += *std::max_element(c, c + 4);
    }
    e = std::move(ne);
  }
  return e;
}

bool has_monic_factor(const QPoly& f, const std::vector<RatInterval>& roots) {
  size_t n = roots.size();
  std::vector<RatInterval> iv = roots;
  for (size_t k = 1; k <= n / 2; ++k) {
    std::vector<size_t> idx(k);
    std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t start) -> bool {
      if (pos == k) {
        // candidate factor prod (t - r_i) over the subset
        while (true) {
          std::vector<RatInterval> sub;
          for (auto i : idx) sub.push_back(iv[i]);
          auto e = elementary(sub);
          bool narrow = true;
          for (auto& x : e)
            if (x.hi - x.lo >= Rational(1, 4)) narrow = false;
          if (!narrow) {
            for (auto i : idx) iv[i] = poly::bisect_root(f, iv[i]);
            continue;
          }
          QPoly g(k + 1);
          for (size_t j = 0; j <= k; ++j) {
            Rational mid = (e[j].lo + e[j].hi) / 2;
            Integer r;
            mpz_fdiv_q(r.get_mpz_t(), Rational(mid + Rational(1, 2)).get_num().get_mpz_t(),
                       Rational(mid + Rational(1, 2)).get_den().get_mpz_t());
            if (Rational(r) < e[j].lo || Rational(r) > e[j].hi) return false;
            // coefficient of t^{k-j} is (-1)^j e_j
            g[k - j] = (j % 2 ? -1 : 1) * Rational(r);
          }
          return poly::rem(f, g).empty();
        }
      }
      for (size_t i = start; i < n; ++i) {
        idx[pos] = i;
        if (rec(pos + 1, i + 1)) return true;
      }
      return false;
    };
    if (rec(0, 0)) return true;
  }
  return false;
}

}  // namespace

std::shared_ptr<const TotallyRealField> TotallyRealField::make(const std::vector<Integer>& min_poly) {
  auto F = std::make_shared<TotallyRealField>();
  QPoly f;
  for (const auto& c : min_poly) f.push_back(Rational(c));
  poly::trim(f);
  if (f.size() < 3) throw Error(ErrorCode::InvalidInput, "min_poly must have degree >= 2");
  if (f.back() != 1) throw Error(ErrorCode::InvalidInput, "min_poly must be monic");
  if (poly::degree(poly::gcd(f, poly::derivative(f))) > 0)
    throw Error(ErrorCode::DegenerateRoots, "min_poly has a repeated root");
  size_t n = f.size() - 1;
  if (poly::count_real_roots(f) != static_cast<int>(n))
    throw Error(ErrorCode::NotTotallyReal, "min_poly has non-real roots");
  auto roots = poly::isolate_real_roots(f);
  if (has_monic_factor(f, roots)) throw Error(ErrorCode::NotIrreducible, "min_poly factors over Q");

  F->n_ = n;
  F->f_ = f;
  F->roots_ = roots;
  // Newton power sums p_0..p_{2n-2}
  std::vector<Rational> p(2 * n - 1, Rational(0));
  p[0] = Rational(static_cast<long>(n));
  for (size_t k = 1; k < p.size(); ++k) {
    Rational s = 0;
    for (size_t i = 1; i <= std::min(k, n); ++i) {
      if (i < k)
        s += f[n - i] * p[k - i];
      else
        s += Rational(static_cast<long>(k)) * f[n - k];
    }
    p[k] = -s;
  }
  F->power_sums_ = p;
  F->gram_ = zero_matrix(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) F->gram_[i][j] = p[i + j];
  F->disc_ = poly::discriminant(f);
  F->D_ = Rational(abs(F->disc_)).get_num();
  return F;
}

FieldElement TotallyRealField::theta() const { return unit_vec(n_, 1); }

FieldElement TotallyRealField::from_rational(const Rational& q) const {
  FieldElement x = zero();
  x[0] = q;
  return x;
}

FieldElement TotallyRealField::from_poly(const QPoly& p) const {
  QPoly r = poly::rem(p, f_);
  FieldElement x = zero();
  for (size_t i = 0; i < r.size(); ++i) x[i] = r[i];
  return x;
}

FieldElement TotallyRealField::mul(const FieldElement& x, const FieldElement& y) const {
  return from_poly(poly::mul(x, y));
}

QMatrix TotallyRealField::mult_matrix(const FieldElement& x) const {
  QMatrix m = zero_matrix(n_, n_);
  FieldElement col = x;
  for (size_t k = 0; k < n_; ++k) {
    for (size_t i = 0; i < n_; ++i) m[i][k] = col[i];
    col = mul(col, theta());
  }
  return m;
}

FieldElement TotallyRealField::inv(const FieldElement& x) const {
  if (is_zero(x)) throw Error(ErrorCode::ZeroInput, "inverse of zero");
  FieldElement y;
  solve(mult_matrix(x), one(), y);
  return y;
}

FieldElement TotallyRealField::pow(const FieldElement& x, long k) const {
  FieldElement base = k < 0 ? inv(x) : x;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : k;
  FieldElement r = one();
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

Rational TotallyRealField::trace(const FieldElement& x) const {
  Rational t = 0;
  for (size_t i = 0; i < n_; ++i) t += x[i] * power_sums_[i];
  return t;
}

Rational TotallyRealField::trace_pairing(const FieldElement& x, const FieldElement& y) const {
  return dot(x, mat_vec(gram_, y));
}

Rational TotallyRealField::norm(const FieldElement& x) const { return det(mult_matrix(x)); }

QPoly TotallyRealField::charpoly(const FieldElement& x) const { return poly::charpoly(mult_matrix(x)); }

bool TotallyRealField::is_rational(const FieldElement& x) const {
  for (size_t i = 1; i < n_; ++i)
    if (x[i] != 0) return false;
  return true;
}

bool TotallyRealField::is_algebraic_integer(const FieldElement& x) const {
  for (const auto& c : charpoly(x))
    if (c.get_den() != 1) return false;
  return true;
}

bool TotallyRealField::is_unit(const FieldElement& x) const {
  if (is_zero(x) || !is_algebraic_integer(x)) return false;
  return abs(norm(x)) == 1;
}

std::vector<RatInterval> TotallyRealField::embed(const FieldElement& x, unsigned bits) const {
  Rational w = pow2_neg(bits);
  std::vector<RatInterval> out;
  for (size_t i = 0; i < n_; ++i) {
    RatInterval r = roots_[i];
    while (true) {
      RatInterval v = poly::eval(x, r);
      if (v.hi - v.lo <= w) {
        out.push_back(v);
        break;
      }
      r = poly::bisect_root(f_, r);
    }
  }
  return out;
}

std::vector<Interval> TotallyRealField::embed_mpfr(const FieldElement& x, unsigned bits, mpfr_prec_t prec) const {
  std::vector<Interval> out;
  for (const auto& r : embed(x, bits)) out.emplace_back(r.lo, r.hi, prec);
  return out;
}

int TotallyRealField::embedding_sign(const FieldElement& x, size_t i) const {
  if (is_zero(x)) return 0;
  RatInterval r = roots_[i];
  while (true) {
    RatInterval v = poly::eval(x, r);
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    r = poly::bisect_root(f_, r);
  }
}

bool TotallyRealField::is_totally_positive(const FieldElement& x) const {
  if (is_zero(x)) throw Error(ErrorCode::ZeroInput, "total positivity of 0");
  for (size_t i = 0; i < n_; ++i)
    if (embedding_sign(x, i) < 0) return false;
  return true;
}

std::vector<int> TotallyRealField::conjugate_ranks(const FieldElement& x) const {
  std::vector<int> ranks(n_, 0);
  if (is_rational(x)) return ranks;
  // conjugates are the roots of the squarefree part of the char poly
  QPoly g = poly::squarefree_part(charpoly(x));
  auto iso = poly::isolate_real_roots(g);
  for (size_t i = 0; i < n_; ++i) {
    RatInterval r = roots_[i];
    while (true) {
      RatInterval v = poly::eval(x, r);
      int hit = -1;
      for (size_t k = 0; k < iso.size(); ++k)
        if (iso[k].lo <= v.lo && v.hi <= iso[k].hi) hit = static_cast<int>(k);
      if (hit >= 0) {
        ranks[i] = hit;
        break;
      }
      r = poly::bisect_root(f_, r);
    }
  }
  return ranks;
}

void validate_units(const TotallyRealField& F, const UnitGroupData& V) {
  for (const auto& u : V.generators) {
    if (!F.is_unit(u)) throw Error(ErrorCode::NotAUnit, "generator " + to_string(u) + " is not a unit");
    if (!F.is_totally_positive(u))
      throw Error(ErrorCode::NotTotallyPositive, "generator " + to_string(u) + " is not totally positive");
  }
  if (V.generators.size() != F.degree() - 1)
    throw Error(ErrorCode::InvalidInput, "unit group needs n-1 generators");
  // log-independence: the regulator determinant is nonzero, certified in intervals
  for (unsigned bits = 64;; bits *= 2) {
    size_t r = V.generators.size();
    std::vector<std::vector<Interval>> logs;
    for (const auto& u : V.generators) {
      std::vector<Interval> row;
      for (auto& e : F.embed_mpfr(u, bits, bits + 32)) row.push_back(e.log());
      logs.push_back(row);
    }
    // determinant of the r x r minor dropping the last embedding, by cofactor expansion
    std::function<Interval(std::vector<size_t>, size_t)> minor = [&](std::vector<size_t> cols, size_t row) {
      if (row == r) return Interval(Rational(1), bits + 32);
      Interval acc(Rational(0), bits + 32);
      for (size_t k = 0; k < cols.size(); ++k) {
        std::vector<size_t> rest = cols;
        rest.erase(rest.begin() + k);
        Interval t = logs[row][cols[k]] * minor(rest, row + 1);
        acc = (k % 2) ? acc - t : acc + t;
      }
      return acc;
    };
    std::vector<size_t> cols;
    for (size_t k = 0; k < r; ++k) cols.push_back(k);
    Interval d = minor(cols, 0);
    if (!d.contains_zero()) return;
    if (bits > 2048) throw Error(ErrorCode::InvalidInput, "unit generators are not independent");
  }
}

ScaledRational det_scaled(const TotallyRealField& F, const std::vector<FieldElement>& A) {
  return ScaledRational(det(A), 1, F.disc_abs());
}

std::pair<std::vector<size_t>, std::vector<size_t>> limit_pair(const TotallyRealField& F,
                                                               const FieldElement& eps) {
  if (!F.is_unit(eps)) throw Error(ErrorCode::NotAUnit, to_string(eps) + " is not a unit");
  if (!F.is_totally_positive(eps)) throw Error(ErrorCode::NotTotallyPositive, to_string(eps));
  auto ranks = F.conjugate_ranks(eps);
  int lo = *std::min_element(ranks.begin(), ranks.end());
  int hi = *std::max_element(ranks.begin(), ranks.end());
  std::vector<size_t> mins, maxs;
  for (size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] == lo) mins.push_back(i);
    if (ranks[i] == hi) maxs.push_back(i);
  }
  return {mins, maxs};
}

FieldElement fundamental_unit_quadratic(long d, long bound) {
  if (d < 2) throw Error(ErrorCode::InvalidInput, "d must be >= 2");
  for (long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) throw Error(ErrorCode::InvalidInput, "d is not squarefree");
  bool half = (d % 4 == 1);
  long k = half ? 4 : 1;
  Integer x2, x;
  for (long y = 1; y <= bound; ++y) {
    Integer dy2 = Integer(d) * y * y;
    for (int s : {-1, 1}) {
      x2 = dy2 + s * k;
      if (x2 <= 0 || !mpz_perfect_square_p(x2.get_mpz_t())) continue;
      mpz_sqrt(x.get_mpz_t(), x2.get_mpz_t());
      Rational den = half ? 2 : 1;
      FieldElement eta{Rational(x) / den, Rational(y) / den};
      if (s == -1) {
        // norm -1: square it to get total positivity
        FieldElement sq{eta[0] * eta[0] + d * eta[1] * eta[1], 2 * eta[0] * eta[1]};
        return sq;
      }
      return eta;
    }
  }
  throw Error(ErrorCode::SearchBoundExceeded, "no unit found with y <= " + std::to_string(bound));
}

}  // namespace conesum
