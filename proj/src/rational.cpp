#include "conesum/rational.hpp"

#include <sstream>

namespace conesum {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotTotallyReal: return "NotTotallyReal";
    case ErrorCode::DegenerateRoots: return "DegenerateRoots";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotTotallyPositive: return "NotTotallyPositive";
    case ErrorCode::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorCode::NotFullDim: return "NotFullDim";
    case ErrorCode::DegenerateVertex: return "DegenerateVertex";
    case ErrorCode::PointNotInterior: return "PointNotInterior";
    case ErrorCode::RayNotRational: return "RayNotRational";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotTopDegree: return "NotTopDegree";
    case ErrorCode::UnitDoesNotPreserveM: return "UnitDoesNotPreserveM";
    case ErrorCode::ConeNotInFan: return "ConeNotInFan";
    case ErrorCode::OverlappingStars: return "OverlappingStars";
    case ErrorCode::RayOnExistingFace: return "RayOnExistingFace";
    case ErrorCode::SingularAt_x0: return "SingularAt_x0";
    case ErrorCode::NotConvexUnion: return "NotConvexUnion";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::SingularE: return "SingularE";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::MissingIntersectionEntry: return "MissingIntersectionEntry";
    case ErrorCode::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorCode::NotFound: return "NotFound";
  }
  return "Unknown";
}

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t += c;
  if (t.empty()) throw Error(ErrorCode::InvalidInput, "empty rational");
  if (t[0] == '+') t = t.substr(1);
  Rational q;
  try {
    auto dot = t.find('.');
    if (dot != std::string::npos) {
      // decimal literal, read exactly
      bool neg = !t.empty() && t[0] == '-';
      std::string digits = t.substr(neg ? 1 : 0);
      dot = digits.find('.');
      std::string ip = digits.substr(0, dot), fp = digits.substr(dot + 1);
      std::string all = ip + fp;
      for (char c : all)
        if (c < '0' || c > '9') throw Error(ErrorCode::InvalidInput, "bad rational '" + s + "'");
      Integer num(all.empty() ? "0" : all);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
      q = Rational(num, den);
      if (neg) q = -q;
    } else {
      if (q.set_str(t, 10) != 0) throw Error(ErrorCode::InvalidInput, "bad rational '" + s + "'");
      if (q.get_den() == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + s + "'");
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::InvalidInput, "bad rational '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const QVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ")";
  return os.str();
}

QVec zero_vec(size_t n) { return QVec(n, Rational(0)); }

QVec unit_vec(size_t n, size_t i) {
  QVec v = zero_vec(n);
  v[i] = 1;
  return v;
}

QMatrix identity(size_t n) {
  QMatrix m(n, zero_vec(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMatrix zero_matrix(size_t rows, size_t cols) { return QMatrix(rows, zero_vec(cols)); }

QMatrix transpose(const QMatrix& a) {
  if (a.empty()) return {};
  QMatrix t(a[0].size(), zero_vec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  size_t k = b.size(), m = b.empty() ? 0 : b[0].size();
  QMatrix c(a.size(), zero_vec(m));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

QVec mat_vec(const QMatrix& a, const QVec& v) {
  QVec r(a.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
  return r;
}

QVec vec_mat(const QVec& v, const QMatrix& a) {
  size_t m = a.empty() ? 0 : a[0].size();
  QVec r = zero_vec(m);
  for (size_t i = 0; i < a.size(); ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < m; ++j) r[j] += v[i] * a[i][j];
  }
  return r;
}

QVec operator+(const QVec& a, const QVec& b) {
  QVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

QVec operator-(const QVec& a, const QVec& b) {
  QVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

QVec operator-(const QVec& a) {
  QVec r(a);
  for (auto& x : r) x = -x;
  return r;
}

QVec operator*(const Rational& s, const QVec& a) {
  QVec r(a);
  for (auto& x : r) x *= s;
  return r;
}

Rational dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

int sign(const Rational& q) { return sgn(q); }

Rational det(QMatrix a) {
  size_t n = a.size();
  Rational d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return d;
}

std::vector<size_t> rref(QMatrix& a) {
  std::vector<size_t> piv;
  if (a.empty()) return piv;
  size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

size_t rank(QMatrix a) { return rref(a).size(); }

QMatrix row_space_basis(const QMatrix& rows) {
  QMatrix a = rows;
  size_t r = rref(a).size();
  a.resize(r);
  return a;
}

QMatrix nullspace(const QMatrix& a) {
  if (a.empty()) return {};
  size_t cols = a[0].size();
  QMatrix m = a;
  auto piv = rref(m);
  std::vector<bool> is_piv(cols, false);
  for (auto p : piv) is_piv[p] = true;
  QMatrix basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    QVec v = zero_vec(cols);
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    basis.push_back(v);
  }
  return basis;
}

bool solve(const QMatrix& a, const QVec& b, QVec& x) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  QMatrix m(rows, zero_vec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  auto piv = rref(m);
  if (!piv.empty() && piv.back() == cols) return false;
  x = zero_vec(cols);
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = m[i][cols];
  return true;
}

QMatrix inverse(const QMatrix& a) {
  size_t n = a.size();
  QMatrix m(n, zero_vec(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  auto piv = rref(m);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error(ErrorCode::InvalidInput, "singular matrix");
  QMatrix inv(n, zero_vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

QVec primitive_integer(const QVec& v) {
  Integer l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    r[i] = v[i] * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].get_num().get_mpz_t());
  }
  if (g == 0) return r;
  for (auto& x : r) x /= g;
  return r;
}

QVec proj_normalize(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return (1 / x) * v;
  return v;
}

QVec ray_normalize(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return (1 / abs(x)) * v;
  return v;
}

}  // namespace conesum
