#include "conesum/space.hpp"

namespace conesum {

Space Space::standard(size_t n) {
  Space s;
  s.n = n;
  s.G = identity(n);
  s.D = 1;
  return s;
}

Space Space::of_field(FieldPtr F) {
  Space s;
  s.n = F->degree();
  s.G = F->trace_form();
  s.D = F->disc_abs();
  s.field = std::move(F);
  return s;
}

Rational Space::pair(const QVec& x, const QVec& y) const { return dot(x, mat_vec(G, y)); }

QVec Space::functional_to_point(const QVec& c) const {
  QVec y;
  solve(G, c, y);
  return y;
}

Rational Space::norm(const QVec& x) const {
  if (field) return field->norm(x);
  Rational p = 1;
  for (const auto& c : x) p *= c;
  return p;
}

bool Space::totally_positive(const QVec& x) const {
  if (field) return field->is_totally_positive(x);
  if (is_zero(x)) throw Error(ErrorCode::ZeroInput, "total positivity of 0");
  for (const auto& c : x)
    if (c <= 0) return false;
  return true;
}

int Space::embedding_sign(const QVec& x, size_t i) const {
  if (field) return field->embedding_sign(x, i);
  return sgn(x[i]);
}

ScaledRational Space::det_scaled(const std::vector<QVec>& A) const { return ScaledRational(det(A), 1, D); }

}  // namespace conesum
