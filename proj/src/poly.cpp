#include "conesum/poly.hpp"

#include <algorithm>

namespace conesum::poly {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) {
  QPoly t = p;
  trim(t);
  return static_cast<int>(t.size()) - 1;
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  QPoly bb = b;
  trim(bb);
  if (bb.empty()) throw Error(ErrorCode::ZeroInput, "polynomial division by zero");
  r = a;
  trim(r);
  int db = degree(bb);
  q.assign(std::max(0, degree(r) - db + 1), Rational(0));
  while (!r.empty() && degree(r) >= db) {
    int dr = degree(r);
    Rational c = r.back() / bb.back();
    q[dr - db] = c;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= c * bb[i];
    trim(r);
  }
  trim(q);
}

QPoly rem(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  return r;
}

QPoly make_monic(const QPoly& p) {
  QPoly r = p;
  trim(r);
  if (r.empty()) return r;
  Rational l = r.back();
  for (auto& c : r) c /= l;
  return r;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * p[i]);
  trim(d);
  return d;
}

Rational eval(const QPoly& p, const Rational& x) {
  Rational v = 0;
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

static RatInterval imul(const RatInterval& a, const RatInterval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

RatInterval eval(const QPoly& p, const RatInterval& x) {
  RatInterval v{0, 0};
  for (size_t i = p.size(); i-- > 0;) {
    v = imul(v, x);
    v.lo += p[i];
    v.hi += p[i];
  }
  return v;
}

Rational resultant(const QPoly& a0, const QPoly& b0) {
  QPoly a = a0, b = b0;
  trim(a);
  trim(b);
  int m = degree(a), n = degree(b);
  if (m < 0 || n < 0) return 0;
  if (m == 0 || n == 0) {
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= a[0];
    for (int i = 0; i < m; ++i) r *= b[0];
    return r;
  }
  size_t sz = m + n;
  QMatrix s = zero_matrix(sz, sz);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
  return det(s);
}

Rational discriminant(const QPoly& p0) {
  QPoly p = p0;
  trim(p);
  int n = degree(p);
  Rational r = resultant(p, derivative(p)) / p.back();
  if ((n * (n - 1) / 2) % 2) r = -r;
  return r;
}

QPoly squarefree_part(const QPoly& p) {
  QPoly g = gcd(p, derivative(p));
  QPoly q, r;
  divmod(p, g, q, r);
  return make_monic(q);
}

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq;
  QPoly a = p;
  trim(a);
  seq.push_back(a);
  QPoly b = derivative(a);
  while (!b.empty()) {
    seq.push_back(b);
    QPoly r = rem(a, b);
    for (auto& c : r) c = -c;
    a = b;
    b = r;
  }
  return seq;
}

int sign_variations(const std::vector<QPoly>& seq, const Rational& x) {
  int v = 0, last = 0;
  for (const auto& p : seq) {
    int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int count_roots(const std::vector<QPoly>& seq, const Rational& a, const Rational& b) {
  return sign_variations(seq, a) - sign_variations(seq, b);
}

Rational root_bound(const QPoly& p0) {
  QPoly p = p0;
  trim(p);
  Rational m = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rational(abs(p[i] / p.back())));
  return 1 + m;
}

int count_real_roots(const QPoly& p) {
  auto seq = sturm_sequence(p);
  Rational b = root_bound(p);
  return count_roots(seq, -b, b);
}

std::vector<RatInterval> isolate_real_roots(const QPoly& p) {
  auto seq = sturm_sequence(p);
  Rational b = root_bound(p);
  std::vector<RatInterval> out;
  std::vector<RatInterval> stack{{-b, b}};
  // depth-first, right half pushed first so output comes out increasing
  while (!stack.empty()) {
    RatInterval iv = stack.back();
    stack.pop_back();
    int c = count_roots(seq, iv.lo, iv.hi);
    if (c == 0) continue;
    if (c == 1) {
      out.push_back(iv);
      continue;
    }
    Rational m = (iv.lo + iv.hi) / 2;
    stack.push_back({m, iv.hi});
    stack.push_back({iv.lo, m});
  }
  // make closed intervals disjoint and keep endpoints off the roots
  for (auto& iv : out) {
    if (eval(p, iv.hi) == 0) {
      iv.lo = iv.hi;
      continue;
    }
    while (eval(p, iv.lo) == 0 || count_roots(seq, iv.lo, iv.hi) != 1) {
      Rational m = (iv.lo + iv.hi) / 2;
      if (count_roots(seq, iv.lo, m) == 1)
        iv.hi = m;
      else
        iv.lo = m;
    }
  }
  for (size_t i = 0; i + 1 < out.size(); ++i) {
    while (out[i].hi >= out[i + 1].lo) {
      out[i] = bisect_root(p, out[i]);
      out[i + 1] = bisect_root(p, out[i + 1]);
    }
  }
  return out;
}

RatInterval bisect_root(const QPoly& p, const RatInterval& iv) {
  if (iv.lo == iv.hi) return iv;
  Rational m = (iv.lo + iv.hi) / 2;
  int sm = sgn(eval(p, m));
  if (sm == 0) return {m, m};
  int sl = sgn(eval(p, iv.lo));
  if (sl == 0) return {iv.lo, iv.lo};
  if (sl != sm) return {iv.lo, m};
  return {m, iv.hi};
}

QPoly charpoly(const QMatrix& a) {
  size_t n = a.size();
  // c_n = 1, M_0 = 0; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k
  QPoly c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix m = zero_matrix(n, n);
  for (size_t k = 1; k <= n; ++k) {
    QMatrix am = mat_mul(a, m);
    for (size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = am;
    QMatrix t = mat_mul(a, m);
    Rational tr = 0;
    for (size_t i = 0; i < n; ++i) tr += t[i][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

}  // namespace conesum::poly
